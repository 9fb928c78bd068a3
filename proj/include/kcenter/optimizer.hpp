#pragma once

#include <functional>
#include <vector>

#include "kcenter/feasibility.hpp"
#include "kcenter/geometry.hpp"

// Radius minimization over the monotone feasibility deciders: bracket the
// optimum with one trivially feasible radius, then bisect. An optional exact
// mode for parallel layouts searches the finite set of candidate radii where
// the interval structure changes.

namespace kcenter {

struct Bracket {
    double lo = 0.0;  // infeasible, unless the optimum is 0
    double hi = 0.0;  // feasible
};

// hi is the worst weighted distance to one fixed admissible center (the
// origin for axis layouts, the leftmost point's x on the lower line for
// parallel ones), so a single center certifies feasibility at hi.
Bracket initial_bracket(const Instance& inst);

struct MinimizeResult {
    double radius = 0.0;
    int iterations = 0;
};

// Bisects until hi - lo <= rel_tol * max(1, hi); the returned radius is the
// final feasible hi.
MinimizeResult minimize_radius(const std::function<bool(double)>& feasible, Bracket bracket,
                               double rel_tol = 1e-9);

// Radii at which the parallel-line interval structure changes: tangency radii
// plus, per line and point pair, the radius where two reach intervals touch.
// Sorted ascending, deduplicated, restricted to [0, bracket hi].
std::vector<double> candidate_radii_parallel(const Instance& inst);

struct SolveOptions {
    double rel_tol = 1e-9;
    bool exact_candidates = false;  // parallel layouts only
    DecideOptions decide;
};

struct SolveOutcome {
    Solution solution;
    std::size_t decider_calls = 0;
};

// End to end: bracket, minimize, re-run the decider at the result for the
// witness centers.
SolveOutcome solve(const Instance& inst, const SolveOptions& opts = {});

// Layout dispatch shared by solve and the CLI.
FeasibilityResult decide(const Instance& inst, double r, const DecideOptions& opts = {});

}  // namespace kcenter
