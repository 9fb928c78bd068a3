#include "kcenter/optimizer.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "kcenter/parallel.hpp"
#include "kcenter/perpendicular.hpp"

namespace kcenter {

FeasibilityResult decide(const Instance& inst, double r, const DecideOptions& opts) {
    switch (inst.layout.kind) {
        case LayoutKind::Parallel: return decide_parallel(inst, r, opts);
        case LayoutKind::Perpendicular: return decide_perpendicular(inst, r, opts);
        case LayoutKind::Corner: return decide_corner(inst, r, opts);
        case LayoutKind::TJunction: return decide_tjunction(inst, r, opts);
    }
    throw std::logic_error("unknown layout kind");
}

Bracket initial_bracket(const Instance& inst) {
    Bracket b;
    double ax = 0.0, ay = 0.0;
    if (inst.layout.kind == LayoutKind::Parallel) {
        ax = inst.points.empty() ? 0.0 : inst.points.front().x;
        ay = inst.layout.y2;
    }
    for (const auto& p : inst.points) b.hi = std::max(b.hi, weighted_distance(p, ax, ay));
    return b;
}

MinimizeResult minimize_radius(const std::function<bool(double)>& feasible, Bracket bracket,
                               double rel_tol) {
    if (rel_tol <= 0.0) throw std::invalid_argument("rel_tol must be positive");
    MinimizeResult res;
    double lo = bracket.lo;
    double hi = bracket.hi;
    while (hi - lo > rel_tol * std::max(1.0, hi)) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;  // out of doubles
        ++res.iterations;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    res.radius = hi;
    return res;
}

std::vector<double> candidate_radii_parallel(const Instance& inst) {
    if (inst.layout.kind != LayoutKind::Parallel)
        throw std::invalid_argument("candidate_radii_parallel: parallel layouts only");
    const double r_max = initial_bracket(inst).hi;
    std::vector<double> out{0.0, r_max};

    for (const double line_y : {inst.layout.y1, inst.layout.y2}) {
        for (const auto& p : inst.points) {
            const double t = p.w * std::abs(p.y - line_y);
            if (t <= r_max) out.push_back(t);
        }
        // Radius where the reach intervals of points i and j touch on this
        // line: half-chord(i, r) + half-chord(j, r) = |xj - xi|. The left
        // side grows strictly in r past both tangency radii.
        const auto& pts = inst.points;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const double dx = std::abs(pts[j].x - pts[i].x);
                const double hi_ = std::abs(pts[i].y - line_y);
                const double hj = std::abs(pts[j].y - line_y);
                const double birth = std::max(pts[i].w * hi_, pts[j].w * hj);
                auto gap = [&](double r) {
                    const double ri = r / pts[i].w, rj = r / pts[j].w;
                    const double si = std::sqrt(std::max(0.0, ri * ri - hi_ * hi_));
                    const double sj = std::sqrt(std::max(0.0, rj * rj - hj * hj));
                    return si + sj - dx;
                };
                if (gap(birth) > 0.0 || birth > r_max) continue;  // already touching at birth
                if (gap(r_max) < 0.0) continue;                   // never touch inside the bracket
                double lo = birth, hi = r_max;
                for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
                    const double mid = lo + (hi - lo) / 2.0;
                    (gap(mid) >= 0.0 ? hi : lo) = mid;
                }
                out.push_back(hi);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SolveOutcome solve(const Instance& inst, const SolveOptions& opts) {
    SolveOutcome outcome;
    DecideOptions probe = opts.decide;
    probe.want_witness = false;
    const auto feasible = [&](double r) {
        ++outcome.decider_calls;
        return decide(inst, r, probe).feasible;
    };

    const Bracket bracket = initial_bracket(inst);
    double r_hat;
    if (feasible(0.0)) {
        r_hat = 0.0;
    } else if (opts.exact_candidates && inst.layout.kind == LayoutKind::Parallel) {
        const auto candidates = candidate_radii_parallel(inst);
        // candidates.front() = 0 is known infeasible, candidates.back() is
        // the bracket radius and feasible.
        std::size_t lo = 0, hi = candidates.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (feasible(candidates[mid]))
                hi = mid;
            else
                lo = mid;
        }
        r_hat = candidates[hi];
    } else {
        r_hat = minimize_radius(feasible, bracket, opts.rel_tol).radius;
    }

    DecideOptions with_witness = opts.decide;
    with_witness.want_witness = true;
    ++outcome.decider_calls;
    auto final_res = decide(inst, r_hat, with_witness);
    if (!final_res.feasible || !final_res.solution) {
        // The bracket guarantees feasibility at hi for valid instances.
        throw std::runtime_error("solve: decider rejected the bracketed radius");
    }
    outcome.solution = std::move(*final_res.solution);
    return outcome;
}

}  // namespace kcenter
