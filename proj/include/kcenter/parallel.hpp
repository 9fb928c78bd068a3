#pragma once

#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcenter/feasibility.hpp"
#include "kcenter/geometry.hpp"

// Weighted (k,r)-feasibility for centers on two parallel horizontal lines.
//
// Each input point contributes a reach interval on each line (possibly
// empty). A partial solution for a prefix of the x-sorted points is
// summarized by a configuration (x1, x2; z): the right endpoints of the
// slack intervals of the rightmost stab on L1 and L2, plus the stab count z.
// The decider sweeps the points left to right maintaining the set of
// mutually non-dominated configurations (the frontier) in two ordered
// count blocks, which keeps every update O(log n) amortized.

namespace kcenter {

// A stab position that has been fixed (evicted from the movable rightmost
// slot). Nodes are immutable and shared; the FrontierSet arena owns them.
struct PierceChain {
    LineTag line = LineTag::L1;
    double position = 0.0;
    const PierceChain* parent = nullptr;
    int length = 1;  // nodes on the path including this one
};

// Absent rightmost stab: compares below every real coordinate, is never
// pushed onto a chain and never emitted as a center.
inline constexpr double kAbsent = -std::numeric_limits<double>::infinity();

inline bool is_absent(double v) { return v == kAbsent; }

struct Configuration {
    double x1 = kAbsent;
    double x2 = kAbsent;
    int count = 0;
    const PierceChain* chain = nullptr;
};

// True when c1 is at least as good as c2 no matter which points follow:
// a two-smaller count always wins; at equal counts componentwise >= wins;
// at one-smaller count a single componentwise >= suffices.
bool dominates(const Configuration& c1, const Configuration& c2);

class FrontierSet {
  public:
    FrontierSet();

    std::size_t size() const;
    bool empty() const { return size() == 0; }

    // Members ordered by ascending count, then ascending x1.
    std::vector<Configuration> members() const;

    // First violated frontier-structure property, if any: counts spread,
    // same-count crossing, cross-count disjointness, pairwise domination.
    // Quadratic; intended for fuzz/debug runs.
    std::optional<std::string> check_invariants() const;

    // Total configurations inserted over the lifetime (including the seed).
    std::size_t configs_created() const { return configs_created_; }

    // Test hook: build a frontier with exactly these members. Chains are
    // adopted as raw pointers owned by the caller.
    static FrontierSet from_members(const std::vector<Configuration>& configs);

  private:
    struct Entry {
        double x2 = kAbsent;
        const PierceChain* chain = nullptr;
    };
    // One block per stab count; keyed by x1. Within a block x2 strictly
    // decreases as x1 increases, and at most two consecutive counts exist.
    using Block = std::map<double, Entry>;

    struct Deleted {
        int count = 0;
        double x1 = kAbsent;
        double x2 = kAbsent;
        const PierceChain* chain = nullptr;
    };

    std::map<int, Block> blocks_;
    std::deque<PierceChain> arena_;
    std::size_t configs_created_ = 0;

    const PierceChain* extend_chain(const PierceChain* parent, LineTag line, double pos);
    bool dominated_by_member(const Configuration& cand) const;
    void remove_members_dominated_by(const Configuration& cand);
    void insert_if_not_dominated(const Configuration& cand);
    void drop_empty_blocks();

    friend void apply_nonbuddy(FrontierSet& f, const Interval& j, LineTag line);
    friend void apply_buddy(FrontierSet& f, const Interval& j1, const Interval& j2);
    friend Configuration extract_best(const FrontierSet& f);
};

// Update for a point whose reach interval is nonempty on `line` only.
void apply_nonbuddy(FrontierSet& f, const Interval& j, LineTag line);

// Update for a buddy point (nonempty reach on both lines). Configurations
// piercing the point on neither line are deleted; up to one clamped
// successor per line replaces them.
void apply_buddy(FrontierSet& f, const Interval& j1, const Interval& j2);

// Any member with minimum count. Precondition: nonempty frontier.
Configuration extract_best(const FrontierSet& f);

// Fixed chain stabs plus the present rightmost stabs; exactly c.count pairs.
std::vector<std::pair<LineTag, double>> reconstruct_solution(const Configuration& c);

// Exact minimum piercing over both lines via the frontier sweep.
// Infeasible (min_count unset) iff some point reaches neither line.
FeasibilityResult decide_parallel(const Instance& inst, double r, const DecideOptions& opts = {});

}  // namespace kcenter
