#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "kcenter/geometry.hpp"

namespace kcenter {

struct DecideOptions {
    bool check_invariants = false;  // run the quadratic frontier checks after every point
    bool want_witness = true;
    // Node budget for the exact assignment search the axis deciders fall
    // back to when the greedy pipeline reports infeasible. 0 disables it.
    std::size_t exact_search_nodes = 1u << 20;
};

struct DecideStats {
    std::size_t configs_created = 0;
    std::size_t max_frontier = 0;
    bool exact_fallback_used = false;
    bool exact_fallback_capped = false;
};

struct FeasibilityResult {
    bool feasible = false;
    // Minimum piercing count when known; unset when some point is unreachable
    // at this radius (or, for the axis deciders, when infeasible).
    std::optional<int> min_count;
    std::optional<Solution> solution;
    DecideStats stats;
    std::optional<std::string> invariant_violation;
};

}  // namespace kcenter
