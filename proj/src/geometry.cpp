#include "kcenter/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace kcenter {

std::optional<Interval> interval_on_horizontal_line(const WeightedPoint& p, double line_y, double r) {
    const double reach = r / p.w;
    const double h = std::abs(p.y - line_y);
    if (reach < h) return std::nullopt;
    const double s = std::sqrt(std::max(0.0, reach * reach - h * h));
    return Interval{p.x - s, p.x + s};
}

std::optional<Interval> interval_on_vertical_line(const WeightedPoint& p, double line_x, double r) {
    const double reach = r / p.w;
    const double h = std::abs(p.x - line_x);
    if (reach < h) return std::nullopt;
    const double s = std::sqrt(std::max(0.0, reach * reach - h * h));
    return Interval{p.y - s, p.y + s};
}

double weighted_distance(const WeightedPoint& p, double qx, double qy) {
    return p.w * std::hypot(p.x - qx, p.y - qy);
}

CoordRange x_line_range(const LineLayout& layout) {
    CoordRange full;
    switch (layout.kind) {
        case LayoutKind::Corner: return CoordRange{0.0, full.hi};
        default: return full;
    }
}

CoordRange y_line_range(const LineLayout& layout) {
    CoordRange full;
    switch (layout.kind) {
        case LayoutKind::Corner: return CoordRange{0.0, full.hi};
        case LayoutKind::TJunction: return CoordRange{full.lo, 0.0};
        default: return full;
    }
}

std::optional<Interval> clip_interval(const std::optional<Interval>& iv, const CoordRange& range) {
    if (!iv) return std::nullopt;
    const double lo = std::max(iv->lo, range.lo);
    const double hi = std::min(iv->hi, range.hi);
    if (lo > hi) return std::nullopt;
    return Interval{lo, hi};
}

std::optional<Interval> x_axis_interval(const WeightedPoint& p, double r, const LineLayout& layout) {
    return clip_interval(interval_on_horizontal_line(p, 0.0, r), x_line_range(layout));
}

std::optional<Interval> y_axis_interval(const WeightedPoint& p, double r, const LineLayout& layout) {
    return clip_interval(interval_on_vertical_line(p, 0.0, r), y_line_range(layout));
}

Center make_center(const LineLayout& layout, LineTag line, double pos) {
    Center c;
    c.line = line;
    c.pos = pos;
    if (layout.kind == LayoutKind::Parallel) {
        c.x = pos;
        c.y = (line == LineTag::L1) ? layout.y1 : layout.y2;
    } else if (line == LineTag::L1) {
        c.x = pos;
        c.y = 0.0;
    } else {
        c.x = 0.0;
        c.y = pos;
    }
    return c;
}

namespace {

ValidationReport fail(const std::string& msg) {
    return ValidationReport{false, msg};
}

ValidationReport validate_common(const Instance& inst) {
    if (inst.k < 1) return fail("k must be at least 1");
    for (const auto& p : inst.points) {
        if (!(p.w > 0.0)) {
            std::ostringstream os;
            os << "point " << p.id << " has non-positive weight " << p.w;
            return fail(os.str());
        }
    }
    if (inst.layout.kind == LayoutKind::Parallel) {
        if (!(inst.layout.y1 > inst.layout.y2))
            return fail("parallel layout requires y1 > y2");
    } else {
        for (const auto& p : inst.points) {
            if (p.w != 1.0) {
                std::ostringstream os;
                os << "point " << p.id << " has weight " << p.w
                   << " but axis layouts require unit weights";
                return fail(os.str());
            }
        }
    }
    // ids dense and unique in [0, n)
    std::vector<char> seen(inst.points.size(), 0);
    for (const auto& p : inst.points) {
        if (p.id < 0 || p.id >= static_cast<int>(inst.points.size()) || seen[p.id]) {
            std::ostringstream os;
            os << "point ids must be unique and dense in [0, n); saw id " << p.id;
            return fail(os.str());
        }
        seen[p.id] = 1;
    }
    return ValidationReport{};
}

}  // namespace

ValidationReport validate_instance(Instance& inst, bool sort_if_needed) {
    auto rep = validate_common(inst);
    if (!rep.ok) return rep;
    if (inst.layout.kind == LayoutKind::Parallel) {
        const bool sorted = std::is_sorted(inst.points.begin(), inst.points.end(),
                                           [](const WeightedPoint& a, const WeightedPoint& b) {
                                               return a.x < b.x || (a.x == b.x && a.id < b.id);
                                           });
        if (!sorted) {
            if (!sort_if_needed) return fail("parallel instance points are not sorted by x");
            std::stable_sort(inst.points.begin(), inst.points.end(),
                             [](const WeightedPoint& a, const WeightedPoint& b) {
                                 return a.x < b.x || (a.x == b.x && a.id < b.id);
                             });
        }
    }
    return ValidationReport{};
}

ValidationReport validate_instance(const Instance& inst) {
    auto rep = validate_common(inst);
    if (!rep.ok) return rep;
    if (inst.layout.kind == LayoutKind::Parallel) {
        const bool sorted = std::is_sorted(inst.points.begin(), inst.points.end(),
                                           [](const WeightedPoint& a, const WeightedPoint& b) {
                                               return a.x < b.x || (a.x == b.x && a.id < b.id);
                                           });
        if (!sorted) return fail("parallel instance points are not sorted by x");
    }
    return ValidationReport{};
}

VerifyReport verify_solution(const Instance& inst, const Solution& sol, double eps) {
    VerifyReport rep;
    if (static_cast<int>(sol.centers.size()) > inst.k) {
        rep.ok = false;
        rep.message = "solution uses more centers than k";
        return rep;
    }
    const double tol = 1e-12;
    for (const auto& c : sol.centers) {
        bool on_line = false;
        if (inst.layout.kind == LayoutKind::Parallel) {
            const double line_y = (c.line == LineTag::L1) ? inst.layout.y1 : inst.layout.y2;
            on_line = std::abs(c.y - line_y) <= tol && c.x == c.pos;
        } else if (c.line == LineTag::L1) {
            const auto range = x_line_range(inst.layout);
            on_line = c.y == 0.0 && c.pos >= range.lo - tol && c.pos <= range.hi + tol;
        } else {
            const auto range = y_line_range(inst.layout);
            on_line = c.x == 0.0 && c.pos >= range.lo - tol && c.pos <= range.hi + tol;
        }
        if (!on_line) {
            rep.ok = false;
            rep.message = "center lies off its constraining line";
            return rep;
        }
    }
    for (const auto& p : inst.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : sol.centers) best = std::min(best, weighted_distance(p, c.x, c.y));
        if (sol.centers.empty()) best = 0.0;  // vacuous: no points should exist either
        if (!inst.points.empty() && sol.centers.empty()) {
            rep.ok = false;
            rep.message = "no centers but points present";
            return rep;
        }
        rep.worst = std::max(rep.worst, best);
        if (best > sol.radius * (1.0 + eps)) {
            std::ostringstream os;
            os << "point " << p.id << " at weighted distance " << best
               << " exceeds radius " << sol.radius;
            rep.ok = false;
            rep.message = os.str();
            return rep;
        }
    }
    return rep;
}

}  // namespace kcenter
