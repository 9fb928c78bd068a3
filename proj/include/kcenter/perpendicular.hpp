#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kcenter/feasibility.hpp"
#include "kcenter/geometry.hpp"

// Unweighted (k,r)-feasibility for centers on two perpendicular axis lines
// (full axes, a 90-degree corner of two rays, or a T-junction).
//
// Points reachable from one axis only are covered by an outside-in greedy on
// that axis. The rest live in the center square and are handled by fixed
// small covers plus a sweep: one lone center slides along one axis while two
// balanced trees answer "can <= m stabs on the other axis pierce the still
// uncovered intervals" in O(log n).

namespace kcenter {

struct Classification {
    std::vector<int> x_mandatory;  // reachable from the x-axis line only
    std::vector<int> y_mandatory;  // reachable from the y-axis line only
    std::vector<int> square;       // reachable from both
    std::vector<int> dead;         // reachable from neither; infeasible at this r
};

Classification classify_points(const std::vector<WeightedPoint>& points, double r,
                               const LineLayout& layout = LineLayout::perpendicular());

struct AxisInterval {
    int point_id = -1;
    Interval iv;
};

struct GreedyCover {
    int count = 0;
    std::vector<double> stabs;      // innermost feasible positions, outside-in
    std::vector<int> covered_ids;   // mandatory ids plus optional ids the stabs reach
};

// Minimum piercing of the mandatory intervals on one ray (side +1 or -1),
// processing from the outermost interval inward and stabbing each at its
// innermost endpoint. Optional intervals containing a stab are reported
// covered.
GreedyCover greedy_axis_cover(std::vector<AxisInterval> mandatory, int side,
                              const std::vector<AxisInterval>& optional_intervals = {});

struct SweepEvent {
    double t = 0.0;
    int point_id = -1;
    enum class Kind { Enter, Exit } kind = Kind::Enter;  // Enter: lone center starts covering
};

// Events of a downward sweep over the lone-axis intervals: one Enter at each
// upper endpoint, one Exit at each lower endpoint, ordered by descending t
// with Enters first among ties.
std::vector<SweepEvent> sweep_events(const std::vector<Interval>& lone_intervals);

// Balanced tree over the 2n interval endpoints. Activation paints the two
// leaf-to-root paths (left endpoint blue, right endpoint red) by bumping
// per-edge counters, so deactivation is a decrement and the canonical stabs
// come from root descents.
class ColoredIntervalTree {
  public:
    explicit ColoredIntervalTree(const std::vector<Interval>& intervals);

    void activate(int id);
    void deactivate(int id);
    bool active(int id) const { return active_[id] != 0; }

    // Min active right endpoint: leaf of the leftmost red path.
    std::optional<double> query_ql() const;
    // Max active left endpoint: leaf of the rightmost blue path.
    std::optional<double> query_qr() const;

  private:
    void paint(std::size_t leaf, std::vector<int>& color, int delta);
    std::optional<double> descend(const std::vector<int>& color, bool prefer_left) const;

    std::size_t cap_ = 1;
    std::vector<int> blue_, red_;  // counters on the edge into each node
    std::vector<double> leaf_value_;
    std::vector<std::size_t> left_leaf_, right_leaf_;
    std::vector<char> active_;
    std::size_t active_count_ = 0;
};

// Min-tree keyed by interval left endpoints; an active leaf holds the right
// endpoint, an inactive one the sentinel M = max left endpoint + 1.
class ShortestIntervalHeap {
  public:
    explicit ShortestIntervalHeap(const std::vector<Interval>& intervals);

    void activate(int id);
    void deactivate(int id);
    bool active(int id) const { return active_[id] != 0; }

    double sentinel() const { return sentinel_; }
    double leaf_value(int id) const;

    // True iff some active interval [f, g] has a < f and g < b.
    // Callers must keep b <= sentinel(); the deciders query with b equal to
    // an active left endpoint, which always satisfies this.
    bool contained_interval_exists(double a, double b) const;

  private:
    void set_leaf(std::size_t leaf, double value);
    double range_min(std::size_t lo, std::size_t hi) const;

    std::size_t cap_ = 1;
    double sentinel_ = 1.0;
    std::vector<double> node_min_;
    std::vector<double> leaf_f_;          // sorted left endpoints
    std::vector<std::size_t> leaf_of_id_;
    std::vector<double> right_of_id_;
    std::vector<char> active_;
};

// The two trees kept in lockstep over one interval family.
class SweepStructures {
  public:
    explicit SweepStructures(std::vector<Interval> intervals);

    void activate(int id);
    void deactivate(int id);
    bool active(int id) const { return active_flags_[id] != 0; }
    std::size_t active_count() const { return active_count_; }
    std::size_t flips() const { return flips_; }

    std::optional<double> query_ql() const { return tree_.query_ql(); }
    std::optional<double> query_qr() const { return tree_.query_qr(); }
    bool contained_interval_exists(double a, double b) const {
        return heap_.contained_interval_exists(a, b);
    }

    // Can the active intervals be pierced by at most m stabs, m in {1, 2}?
    bool min_stabs_at_most(int m) const;
    // Canonical stabs once min_stabs_at_most(m) holds: empty, {q_l} or {q_l, q_r}.
    std::vector<double> witness_stabs() const;

  private:
    std::vector<Interval> intervals_;
    ColoredIntervalTree tree_;
    ShortestIntervalHeap heap_;
    std::vector<char> active_flags_;
    std::size_t active_count_ = 0;
    std::size_t flips_ = 0;
};

struct SquareSolveResult {
    bool feasible = false;
    std::vector<Center> centers;
};

// Covers the both-reachable points (minus the excluded ids) with at most
// `budget` centers on the axis lines; exact for every budget. Witness
// centers use as few stabs as the tests that succeeded require.
SquareSolveResult solve_center_square(const std::vector<WeightedPoint>& square_points,
                                      const std::vector<int>& excluded_ids, int budget, double r,
                                      const LineLayout& layout = LineLayout::perpendicular());

FeasibilityResult decide_perpendicular(const Instance& inst, double r, const DecideOptions& opts = {});
FeasibilityResult decide_corner(const Instance& inst, double r, const DecideOptions& opts = {});
FeasibilityResult decide_tjunction(const Instance& inst, double r, const DecideOptions& opts = {});

}  // namespace kcenter
