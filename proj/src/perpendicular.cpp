#include "kcenter/perpendicular.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kcenter {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Classification classify_points(const std::vector<WeightedPoint>& points, double r,
                               const LineLayout& layout) {
    Classification cls;
    for (const auto& p : points) {
        const bool on_x = x_axis_interval(p, r, layout).has_value();
        const bool on_y = y_axis_interval(p, r, layout).has_value();
        if (on_x && on_y)
            cls.square.push_back(p.id);
        else if (on_x)
            cls.x_mandatory.push_back(p.id);
        else if (on_y)
            cls.y_mandatory.push_back(p.id);
        else
            cls.dead.push_back(p.id);
    }
    return cls;
}

GreedyCover greedy_axis_cover(std::vector<AxisInterval> mandatory, int side,
                              const std::vector<AxisInterval>& optional_intervals) {
    GreedyCover out;
    if (side < 0) {
        // Mirror onto the positive ray and back.
        for (auto& m : mandatory) m.iv = Interval{-m.iv.hi, -m.iv.lo};
        std::vector<AxisInterval> opt = optional_intervals;
        for (auto& o : opt) o.iv = Interval{-o.iv.hi, -o.iv.lo};
        out = greedy_axis_cover(std::move(mandatory), +1, opt);
        for (auto& s : out.stabs) s = -s;
        return out;
    }

    // Outside-in: the uncovered interval with the outermost inner endpoint
    // forces a stab; place it at that endpoint. Stabs are decreasing, and an
    // interval is covered iff the innermost stab so far has not passed it.
    std::sort(mandatory.begin(), mandatory.end(), [](const AxisInterval& a, const AxisInterval& b) {
        return a.iv.lo > b.iv.lo || (a.iv.lo == b.iv.lo && a.point_id < b.point_id);
    });
    double innermost = kInf;
    for (const auto& m : mandatory) {
        if (innermost > m.iv.hi) {
            innermost = m.iv.lo;
            out.stabs.push_back(innermost);
        }
        out.covered_ids.push_back(m.point_id);
    }
    out.count = static_cast<int>(out.stabs.size());

    std::vector<double> sorted = out.stabs;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& o : optional_intervals) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), o.iv.lo);
        if (it != sorted.end() && *it <= o.iv.hi) out.covered_ids.push_back(o.point_id);
    }
    std::sort(out.covered_ids.begin(), out.covered_ids.end());
    return out;
}

// ---------------------------------------------------------------- trees ---

ColoredIntervalTree::ColoredIntervalTree(const std::vector<Interval>& intervals) {
    const std::size_t m = intervals.size();
    struct Endpoint {
        double v;
        int id;
        bool right;
    };
    std::vector<Endpoint> eps;
    eps.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        eps.push_back({intervals[i].lo, static_cast<int>(i), false});
        eps.push_back({intervals[i].hi, static_cast<int>(i), true});
    }
    std::sort(eps.begin(), eps.end(), [](const Endpoint& a, const Endpoint& b) {
        if (a.v != b.v) return a.v < b.v;
        if (a.id != b.id) return a.id < b.id;
        return a.right < b.right;
    });
    cap_ = std::bit_ceil(std::max<std::size_t>(2 * m, 1));
    blue_.assign(2 * cap_, 0);
    red_.assign(2 * cap_, 0);
    leaf_value_.assign(cap_, 0.0);
    left_leaf_.resize(m);
    right_leaf_.resize(m);
    for (std::size_t i = 0; i < eps.size(); ++i) {
        leaf_value_[i] = eps[i].v;
        (eps[i].right ? right_leaf_ : left_leaf_)[eps[i].id] = i;
    }
    active_.assign(m, 0);
}

void ColoredIntervalTree::paint(std::size_t leaf, std::vector<int>& color, int delta) {
    for (std::size_t v = leaf + cap_; v > 1; v >>= 1) {
        color[v] += delta;
        assert(color[v] >= 0);
    }
}

void ColoredIntervalTree::activate(int id) {
    if (active_[id]) throw std::logic_error("ColoredIntervalTree: interval already active");
    active_[id] = 1;
    ++active_count_;
    paint(left_leaf_[id], blue_, +1);
    paint(right_leaf_[id], red_, +1);
}

void ColoredIntervalTree::deactivate(int id) {
    if (!active_[id]) throw std::logic_error("ColoredIntervalTree: interval not active");
    active_[id] = 0;
    --active_count_;
    paint(left_leaf_[id], blue_, -1);
    paint(right_leaf_[id], red_, -1);
}

std::optional<double> ColoredIntervalTree::descend(const std::vector<int>& color,
                                                   bool prefer_left) const {
    if (active_count_ == 0) return std::nullopt;
    std::size_t v = 1;
    while (v < cap_) {
        const std::size_t first = prefer_left ? 2 * v : 2 * v + 1;
        const std::size_t second = prefer_left ? 2 * v + 1 : 2 * v;
        if (color[first] > 0)
            v = first;
        else {
            assert(color[second] > 0);
            v = second;
        }
    }
    return leaf_value_[v - cap_];
}

std::optional<double> ColoredIntervalTree::query_ql() const { return descend(red_, true); }
std::optional<double> ColoredIntervalTree::query_qr() const { return descend(blue_, false); }

ShortestIntervalHeap::ShortestIntervalHeap(const std::vector<Interval>& intervals) {
    const std::size_t m = intervals.size();
    std::vector<std::pair<double, int>> fs;
    fs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) fs.emplace_back(intervals[i].lo, static_cast<int>(i));
    std::sort(fs.begin(), fs.end());
    sentinel_ = (fs.empty() ? 0.0 : fs.back().first) + 1.0;
    cap_ = std::bit_ceil(std::max<std::size_t>(m, 1));
    node_min_.assign(2 * cap_, kInf);
    leaf_f_.resize(m);
    leaf_of_id_.resize(m);
    right_of_id_.resize(m);
    active_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        leaf_f_[i] = fs[i].first;
        leaf_of_id_[fs[i].second] = i;
        right_of_id_[fs[i].second] = intervals[fs[i].second].hi;
        node_min_[cap_ + i] = sentinel_;
    }
    for (std::size_t v = cap_ - 1; v >= 1; --v)
        node_min_[v] = std::min(node_min_[2 * v], node_min_[2 * v + 1]);
}

void ShortestIntervalHeap::set_leaf(std::size_t leaf, double value) {
    std::size_t v = leaf + cap_;
    node_min_[v] = value;
    for (v >>= 1; v >= 1; v >>= 1)
        node_min_[v] = std::min(node_min_[2 * v], node_min_[2 * v + 1]);
}

void ShortestIntervalHeap::activate(int id) {
    if (active_[id]) throw std::logic_error("ShortestIntervalHeap: interval already active");
    active_[id] = 1;
    set_leaf(leaf_of_id_[id], right_of_id_[id]);
}

void ShortestIntervalHeap::deactivate(int id) {
    if (!active_[id]) throw std::logic_error("ShortestIntervalHeap: interval not active");
    active_[id] = 0;
    set_leaf(leaf_of_id_[id], sentinel_);
}

double ShortestIntervalHeap::leaf_value(int id) const { return node_min_[cap_ + leaf_of_id_[id]]; }

double ShortestIntervalHeap::range_min(std::size_t lo, std::size_t hi) const {
    double m = kInf;
    std::size_t l = lo + cap_;
    std::size_t r = hi + cap_ + 1;
    while (l < r) {
        if (l & 1) m = std::min(m, node_min_[l++]);
        if (r & 1) m = std::min(m, node_min_[--r]);
        l >>= 1;
        r >>= 1;
    }
    return m;
}

bool ShortestIntervalHeap::contained_interval_exists(double a, double b) const {
    const auto first = std::upper_bound(leaf_f_.begin(), leaf_f_.end(), a);
    const auto last = std::lower_bound(leaf_f_.begin(), leaf_f_.end(), b);
    if (first >= last) return false;
    const std::size_t lo = static_cast<std::size_t>(first - leaf_f_.begin());
    const std::size_t hi = static_cast<std::size_t>(last - leaf_f_.begin()) - 1;
    return range_min(lo, hi) < b;
}

SweepStructures::SweepStructures(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)),
      tree_(intervals_),
      heap_(intervals_),
      active_flags_(intervals_.size(), 0) {}

void SweepStructures::activate(int id) {
    if (active_flags_[id]) throw std::logic_error("SweepStructures: interval already active");
    active_flags_[id] = 1;
    ++active_count_;
    ++flips_;
    tree_.activate(id);
    heap_.activate(id);
}

void SweepStructures::deactivate(int id) {
    if (!active_flags_[id]) throw std::logic_error("SweepStructures: interval not active");
    active_flags_[id] = 0;
    --active_count_;
    ++flips_;
    tree_.deactivate(id);
    heap_.deactivate(id);
}

bool SweepStructures::min_stabs_at_most(int m) const {
    if (m != 1 && m != 2) throw std::invalid_argument("min_stabs_at_most supports m in {1, 2}");
    if (active_count_ == 0) return true;
    const double ql = *tree_.query_ql();
    const double qr = *tree_.query_qr();
    if (qr <= ql) return true;  // one stab pierces everything
    if (m == 1) return false;
    // Stabs at q_l and q_r fail only on an interval strictly inside (q_l, q_r),
    // and no stab pair does better.
    return !heap_.contained_interval_exists(ql, qr);
}

std::vector<double> SweepStructures::witness_stabs() const {
    if (active_count_ == 0) return {};
    const double ql = *tree_.query_ql();
    const double qr = *tree_.query_qr();
    if (qr <= ql) return {ql};
    return {ql, qr};
}

std::vector<SweepEvent> sweep_events(const std::vector<Interval>& lone_intervals) {
    std::vector<SweepEvent> events;
    events.reserve(2 * lone_intervals.size());
    for (std::size_t i = 0; i < lone_intervals.size(); ++i) {
        events.push_back({lone_intervals[i].hi, static_cast<int>(i), SweepEvent::Kind::Enter});
        events.push_back({lone_intervals[i].lo, static_cast<int>(i), SweepEvent::Kind::Exit});
    }
    std::sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
        if (a.t != b.t) return a.t > b.t;
        if (a.kind != b.kind) return a.kind == SweepEvent::Kind::Enter;
        return a.point_id < b.point_id;
    });
    return events;
}

// ------------------------------------------------------- center square ---

namespace {

std::optional<Interval> axis_interval(const WeightedPoint& p, double r, const LineLayout& layout,
                                      LineTag axis) {
    return axis == LineTag::L1 ? x_axis_interval(p, r, layout) : y_axis_interval(p, r, layout);
}

// Fixed center sets that provably cover the whole both-reachable region.
std::vector<Center> fixed_region_cover(const LineLayout& layout, double r) {
    switch (layout.kind) {
        case LayoutKind::Corner:
            return {make_center(layout, LineTag::L1, r), make_center(layout, LineTag::L2, r),
                    make_center(layout, LineTag::L1, 0.0)};
        case LayoutKind::TJunction:
            return {make_center(layout, LineTag::L1, r), make_center(layout, LineTag::L1, -r),
                    make_center(layout, LineTag::L2, -r), make_center(layout, LineTag::L1, 0.0)};
        default:
            return {make_center(layout, LineTag::L1, r), make_center(layout, LineTag::L1, -r),
                    make_center(layout, LineTag::L2, r), make_center(layout, LineTag::L2, -r)};
    }
}

int fixed_cover_budget(const LineLayout& layout) {
    return layout.kind == LayoutKind::Corner ? 3 : 4;
}

// All points pierceable on one axis with at most `budget` stabs?
std::optional<std::vector<Center>> same_axis_cover(const std::vector<WeightedPoint>& pts,
                                                   int budget, double r, const LineLayout& layout,
                                                   LineTag axis) {
    std::vector<Interval> family;
    family.reserve(pts.size());
    for (const auto& p : pts) {
        auto iv = axis_interval(p, r, layout, axis);
        if (!iv) return std::nullopt;
        family.push_back(*iv);
    }
    // Right-endpoint greedy is the exact 1D minimum.
    std::sort(family.begin(), family.end(), [](const Interval& a, const Interval& b) {
        return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
    });
    std::vector<Center> centers;
    double last = 0.0;
    for (const auto& iv : family) {
        if (centers.empty() || iv.lo > last) {
            last = iv.hi;
            if (static_cast<int>(centers.size()) == budget) return std::nullopt;
            centers.push_back(make_center(layout, axis, last));
        }
    }
    return centers;
}

// One lone center sweeping along `lone_axis`, at most m stabs on the other
// axis. Coverage is constant between consecutive endpoint events and closed
// at them, so testing at every event and between every pair of neighbours is
// exhaustive.
std::optional<std::vector<Center>> mixed_sweep(const std::vector<WeightedPoint>& pts, int m,
                                               double r, const LineLayout& layout,
                                               LineTag lone_axis) {
    const LineTag cross_axis = lone_axis == LineTag::L1 ? LineTag::L2 : LineTag::L1;
    const std::size_t n = pts.size();
    std::vector<Interval> lone(n), cross(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto li = axis_interval(pts[i], r, layout, lone_axis);
        auto ci = axis_interval(pts[i], r, layout, cross_axis);
        if (!li || !ci) return std::nullopt;  // intended for both-reachable points
        lone[i] = *li;
        cross[i] = *ci;
    }

    SweepStructures sweep(cross);
    for (std::size_t i = 0; i < n; ++i) sweep.activate(static_cast<int>(i));

    const std::vector<SweepEvent> events = sweep_events(lone);
    // The probes above the first event and below the last cover nothing, so
    // their lone stab may sit anywhere on the (possibly ray-clipped) line.
    const CoordRange lone_range =
        lone_axis == LineTag::L1 ? x_line_range(layout) : y_line_range(layout);
    auto onto_line = [&](double t) { return std::clamp(t, lone_range.lo, lone_range.hi); };

    auto attempt = [&](double t) -> std::optional<std::vector<Center>> {
        if (!sweep.min_stabs_at_most(m)) return std::nullopt;
        std::vector<Center> centers{make_center(layout, lone_axis, t)};
        for (double s : sweep.witness_stabs()) centers.push_back(make_center(layout, cross_axis, s));
        return centers;
    };

    if (!events.empty()) {
        if (auto c = attempt(onto_line(events.front().t + 1.0))) return c;
    }
    // Coverage is constant on the open gap below each event position, so one
    // probe at every event and one inside every gap is exhaustive.
    for (std::size_t i = 0; i < events.size();) {
        const double t = events[i].t;
        std::size_t j = i;
        for (; j < events.size() && events[j].t == t; ++j)
            if (events[j].kind == SweepEvent::Kind::Enter) sweep.deactivate(events[j].point_id);
        if (auto c = attempt(t)) return c;
        for (j = i; j < events.size() && events[j].t == t; ++j)
            if (events[j].kind == SweepEvent::Kind::Exit) sweep.activate(events[j].point_id);
        i = j;
        const double below = i == events.size() ? onto_line(t - 1.0) : (t + events[i].t) / 2.0;
        if (auto c = attempt(below)) return c;
    }
    assert(sweep.flips() <= 3 * n);  // n initial activations plus one flip pair per point
    return std::nullopt;
}

}  // namespace

SquareSolveResult solve_center_square(const std::vector<WeightedPoint>& square_points,
                                      const std::vector<int>& excluded_ids, int budget, double r,
                                      const LineLayout& layout) {
    SquareSolveResult res;
    std::vector<int> excluded = excluded_ids;
    std::sort(excluded.begin(), excluded.end());
    std::vector<WeightedPoint> pts;
    pts.reserve(square_points.size());
    for (const auto& p : square_points) {
        if (!std::binary_search(excluded.begin(), excluded.end(), p.id)) pts.push_back(p);
    }
    if (pts.empty()) {
        res.feasible = true;
        return res;
    }
    if (budget <= 0) return res;

    if (budget >= fixed_cover_budget(layout)) {
        res.feasible = true;
        res.centers = fixed_region_cover(layout, r);
        return res;
    }
    for (LineTag axis : {LineTag::L1, LineTag::L2}) {
        if (auto c = same_axis_cover(pts, budget, r, layout, axis)) {
            res.feasible = true;
            res.centers = std::move(*c);
            return res;
        }
    }
    if (budget >= 2) {
        for (LineTag lone : {LineTag::L2, LineTag::L1}) {
            if (auto c = mixed_sweep(pts, budget - 1, r, layout, lone)) {
                res.feasible = true;
                res.centers = std::move(*c);
                return res;
            }
        }
    }
    return res;
}

// ------------------------------------------------------------- deciders ---

namespace {

// Exact fallback: assign each both-reachable point to one axis, pierce each
// axis family with the right-endpoint greedy, and search assignments with a
// monotone lower bound. Used only when the greedy pipeline says infeasible,
// since stab positions chosen for mandatory points can interact with square
// coverage.
struct ExactAssignmentSearch {
    const std::vector<std::optional<Interval>>& xiv;
    const std::vector<std::optional<Interval>>& yiv;
    int k;
    std::size_t node_budget;

    std::size_t nodes = 0;
    bool capped = false;
    std::vector<int> undecided;
    std::vector<Interval> xs, ys;
    std::vector<double> stabs_x, stabs_y;

    static int greedy_count(std::vector<Interval> fam, std::vector<double>* stabs) {
        std::sort(fam.begin(), fam.end(), [](const Interval& a, const Interval& b) {
            return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
        });
        int count = 0;
        double last = 0.0;
        if (stabs) stabs->clear();
        for (const auto& iv : fam) {
            if (count == 0 || iv.lo > last) {
                last = iv.hi;
                ++count;
                if (stabs) stabs->push_back(last);
            }
        }
        return count;
    }

    bool run() {
        for (std::size_t i = 0; i < xiv.size(); ++i) {
            if (xiv[i] && yiv[i])
                undecided.push_back(static_cast<int>(i));
            else if (xiv[i])
                xs.push_back(*xiv[i]);
            else if (yiv[i])
                ys.push_back(*yiv[i]);
            else
                return false;  // unreachable point; caller screened these out
        }
        return dfs(0);
    }

    bool dfs(std::size_t idx) {
        if (capped) return false;
        if (++nodes > node_budget) {
            capped = true;
            return false;
        }
        std::vector<double> sx, sy;
        const int cx = greedy_count(xs, &sx);
        const int cy = greedy_count(ys, &sy);
        if (cx + cy > k) return false;  // families only grow along the branch
        if (idx == undecided.size()) {
            stabs_x = std::move(sx);
            stabs_y = std::move(sy);
            return true;
        }
        const int id = undecided[idx];
        xs.push_back(*xiv[id]);
        if (dfs(idx + 1)) return true;
        xs.pop_back();
        ys.push_back(*yiv[id]);
        if (dfs(idx + 1)) return true;
        ys.pop_back();
        return false;
    }
};

FeasibilityResult decide_axes(const Instance& inst, double r, const DecideOptions& opts) {
    FeasibilityResult res;
    const auto& layout = inst.layout;
    const auto& points = inst.points;

    const Classification cls = classify_points(points, r, layout);
    if (!cls.dead.empty()) return res;  // some point reaches neither line

    std::vector<AxisInterval> mand_x_pos, mand_x_neg, mand_y_pos, mand_y_neg;
    for (int id : cls.x_mandatory) {
        const auto iv = *x_axis_interval(points[id], r, layout);
        (iv.lo >= 0.0 ? mand_x_pos : mand_x_neg).push_back({id, iv});
    }
    for (int id : cls.y_mandatory) {
        const auto iv = *y_axis_interval(points[id], r, layout);
        (iv.lo >= 0.0 ? mand_y_pos : mand_y_neg).push_back({id, iv});
    }
    std::vector<AxisInterval> square_x, square_y;
    for (int id : cls.square) {
        square_x.push_back({id, *x_axis_interval(points[id], r, layout)});
        square_y.push_back({id, *y_axis_interval(points[id], r, layout)});
    }

    const GreedyCover gx_pos = greedy_axis_cover(mand_x_pos, +1, square_x);
    const GreedyCover gx_neg = greedy_axis_cover(mand_x_neg, -1, square_x);
    const GreedyCover gy_pos = greedy_axis_cover(mand_y_pos, +1, square_y);
    const GreedyCover gy_neg = greedy_axis_cover(mand_y_neg, -1, square_y);
    const int used = gx_pos.count + gx_neg.count + gy_pos.count + gy_neg.count;

    auto exact_fallback = [&]() -> bool {
        if (opts.exact_search_nodes == 0) return false;
        std::vector<std::optional<Interval>> xiv(points.size()), yiv(points.size());
        for (const auto& p : points) {
            xiv[p.id] = x_axis_interval(p, r, layout);
            yiv[p.id] = y_axis_interval(p, r, layout);
        }
        ExactAssignmentSearch search{xiv, yiv, inst.k, opts.exact_search_nodes,
                                     0,   false, {},     {},  {}, {}, {}};
        const bool ok = search.run();
        res.stats.exact_fallback_used = !search.capped;
        res.stats.exact_fallback_capped = search.capped;
        if (!ok) return false;
        Solution sol;
        sol.radius = r;
        for (double s : search.stabs_x) sol.centers.push_back(make_center(layout, LineTag::L1, s));
        for (double s : search.stabs_y) sol.centers.push_back(make_center(layout, LineTag::L2, s));
        res.feasible = true;
        res.min_count = static_cast<int>(sol.centers.size());
        if (opts.want_witness) res.solution = std::move(sol);
        return true;
    };

    if (used > inst.k) return res;  // per-ray minimums are forced

    std::vector<int> excluded;
    for (const auto* g : {&gx_pos, &gx_neg, &gy_pos, &gy_neg})
        excluded.insert(excluded.end(), g->covered_ids.begin(), g->covered_ids.end());
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());

    std::vector<WeightedPoint> square_pts;
    for (int id : cls.square) square_pts.push_back(points[id]);

    const int budget = inst.k - used;
    SquareSolveResult sq;
    for (int b = 0; b <= budget; ++b) {
        sq = solve_center_square(square_pts, excluded, b, r, layout);
        if (sq.feasible) break;
    }
    if (!sq.feasible) {
        // The greedy stabs were placed without regard to square coverage;
        // re-decide exactly before reporting infeasible.
        exact_fallback();
        return res;
    }

    Solution sol;
    sol.radius = r;
    for (const auto* g : {&gx_pos, &gx_neg})
        for (double s : g->stabs) sol.centers.push_back(make_center(layout, LineTag::L1, s));
    for (const auto* g : {&gy_pos, &gy_neg})
        for (double s : g->stabs) sol.centers.push_back(make_center(layout, LineTag::L2, s));
    sol.centers.insert(sol.centers.end(), sq.centers.begin(), sq.centers.end());
    res.feasible = true;
    res.min_count = static_cast<int>(sol.centers.size());
    if (opts.want_witness) res.solution = std::move(sol);
    return res;
}

void require_layout(const Instance& inst, LayoutKind kind, const char* name) {
    if (inst.layout.kind != kind) throw std::invalid_argument(std::string(name) + ": wrong layout kind");
}

}  // namespace

FeasibilityResult decide_perpendicular(const Instance& inst, double r, const DecideOptions& opts) {
    require_layout(inst, LayoutKind::Perpendicular, "decide_perpendicular");
    return decide_axes(inst, r, opts);
}

FeasibilityResult decide_corner(const Instance& inst, double r, const DecideOptions& opts) {
    require_layout(inst, LayoutKind::Corner, "decide_corner");
    return decide_axes(inst, r, opts);
}

FeasibilityResult decide_tjunction(const Instance& inst, double r, const DecideOptions& opts) {
    require_layout(inst, LayoutKind::TJunction, "decide_tjunction");
    return decide_axes(inst, r, opts);
}

}  // namespace kcenter
