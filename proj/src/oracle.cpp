#include "kcenter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace kcenter::oracle {

namespace {

void push_endpoints(std::vector<double>& out, const std::optional<Interval>& iv) {
    if (!iv) return;
    out.push_back(iv->lo);
    out.push_back(iv->hi);
}

void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct TwoIntervalPoint {
    std::optional<Interval> a;  // line 1 (upper line, or x-axis)
    std::optional<Interval> b;  // line 2 (lower line, or y-axis)
};

std::optional<std::vector<TwoIntervalPoint>> reach_intervals(const std::vector<WeightedPoint>& points,
                                                             const LineLayout& layout, double r) {
    std::vector<TwoIntervalPoint> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        TwoIntervalPoint t;
        if (layout.kind == LayoutKind::Parallel) {
            t.a = interval_on_horizontal_line(p, layout.y1, r);
            t.b = interval_on_horizontal_line(p, layout.y2, r);
        } else {
            t.a = x_axis_interval(p, r, layout);
            t.b = y_axis_interval(p, r, layout);
        }
        if (!t.a && !t.b) return std::nullopt;
        out.push_back(t);
    }
    return out;
}

// Minimum over all assignments of two-choice points of the summed per-line
// greedy counts. Stops early once `stop_at` is reached.
int min_total_piercing(const std::vector<TwoIntervalPoint>& pts, int stop_at,
                       std::vector<double>* stabs1 = nullptr,
                       std::vector<double>* stabs2 = nullptr) {
    std::vector<int> free_idx;
    std::vector<Interval> forced1, forced2;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].a && pts[i].b)
            free_idx.push_back(static_cast<int>(i));
        else if (pts[i].a)
            forced1.push_back(*pts[i].a);
        else
            forced2.push_back(*pts[i].b);
    }
    int best = std::numeric_limits<int>::max();
    const std::uint64_t combos = 1ull << free_idx.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        std::vector<Interval> fam1 = forced1, fam2 = forced2;
        for (std::size_t j = 0; j < free_idx.size(); ++j) {
            const auto& p = pts[free_idx[j]];
            if (mask & (1ull << j))
                fam1.push_back(*p.a);
            else
                fam2.push_back(*p.b);
        }
        std::vector<double> s1, s2;
        const int total = min_piercing_1d(std::move(fam1), &s1) + min_piercing_1d(std::move(fam2), &s2);
        if (total < best) {
            best = total;
            if (stabs1) *stabs1 = std::move(s1);
            if (stabs2) *stabs2 = std::move(s2);
            if (best <= stop_at) break;
        }
    }
    return best;
}

}  // namespace

StabCandidateSet stab_candidates(const std::vector<WeightedPoint>& points,
                                 const LineLayout& layout, double r) {
    StabCandidateSet s;
    for (const auto& p : points) {
        if (layout.kind == LayoutKind::Parallel) {
            push_endpoints(s.line1, interval_on_horizontal_line(p, layout.y1, r));
            push_endpoints(s.line2, interval_on_horizontal_line(p, layout.y2, r));
        } else {
            push_endpoints(s.line1, x_axis_interval(p, r, layout));
            push_endpoints(s.line2, y_axis_interval(p, r, layout));
        }
    }
    sort_unique(s.line1);
    sort_unique(s.line2);
    return s;
}

int min_piercing_1d(std::vector<Interval> intervals, std::vector<double>* stabs) {
    if (stabs) stabs->clear();
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); });
    int count = 0;
    double last = 0.0;
    for (const auto& iv : intervals) {
        if (count == 0 || iv.lo > last) {
            last = iv.hi;
            ++count;
            if (stabs) stabs->push_back(last);
        }
    }
    return count;
}

std::optional<int> brute_force_min_piercing_two_lines(const std::vector<WeightedPoint>& points,
                                                      const LineLayout& layout, double r, int cap) {
    if (points.size() > 12) throw std::invalid_argument("oracle guard: at most 12 points");
    if (cap > 6 || cap < 0) throw std::invalid_argument("oracle guard: cap in [0, 6]");
    auto pts = reach_intervals(points, layout, r);
    if (!pts) return std::nullopt;
    const int best = min_total_piercing(*pts, /*stop_at=*/0);
    if (best > cap) return std::nullopt;
    return best;
}

bool brute_force_perpendicular(const std::vector<WeightedPoint>& points, double r, int k,
                               const LineLayout& layout) {
    if (points.size() > 10) throw std::invalid_argument("oracle guard: at most 10 points");
    if (k > 6) throw std::invalid_argument("oracle guard: k <= 6");
    if (layout.kind == LayoutKind::Parallel)
        throw std::invalid_argument("oracle expects an axis layout");
    auto pts = reach_intervals(points, layout, r);
    if (!pts) return false;
    return min_total_piercing(*pts, /*stop_at=*/k) <= k;
}

double grid_search_radius(const Instance& inst, double resolution) {
    if (inst.k > 6) throw std::invalid_argument("oracle guard: k <= 6");
    // Anchor one admissible center; its worst weighted distance brackets r*.
    double hi = 0.0;
    for (const auto& p : inst.points) {
        double d;
        if (inst.layout.kind == LayoutKind::Parallel)
            d = weighted_distance(p, inst.points.front().x, inst.layout.y2);
        else
            d = weighted_distance(p, 0.0, 0.0);
        hi = std::max(hi, d);
    }
    const auto feasible = [&](double r) {
        if (inst.layout.kind == LayoutKind::Parallel) {
            auto c = brute_force_min_piercing_two_lines(inst.points, inst.layout, r,
                                                        std::min(inst.k, 6));
            return c.has_value() && *c <= inst.k;
        }
        return brute_force_perpendicular(inst.points, r, inst.k, inst.layout);
    };
    if (feasible(0.0)) return 0.0;
    std::uint64_t lo_idx = 0;  // infeasible
    std::uint64_t hi_idx = static_cast<std::uint64_t>(std::ceil(hi / resolution)) + 1;
    while (!feasible(static_cast<double>(hi_idx) * resolution)) ++hi_idx;  // safety, rarely taken
    while (hi_idx - lo_idx > 1) {
        const std::uint64_t mid = lo_idx + (hi_idx - lo_idx) / 2;
        if (feasible(static_cast<double>(mid) * resolution))
            hi_idx = mid;
        else
            lo_idx = mid;
    }
    return static_cast<double>(hi_idx) * resolution;
}

}  // namespace kcenter::oracle
