#pragma once

#include <optional>
#include <vector>

#include "kcenter/geometry.hpp"

// Small-instance reference implementations, independent of the production
// deciders. Exactness rests on a canonicalization fact: any piercing set can
// be slid so every stab sits on an interval endpoint, and for a fixed
// assignment of points to lines the per-line optimum is the right-endpoint
// greedy. Enumerating all line assignments is therefore exhaustive.

namespace kcenter::oracle {

// Candidate stab positions per line: every interval endpoint (ray-clipped
// for corner / T-junction layouts). A superset of what an optimal piercing
// needs, kept sorted.
struct StabCandidateSet {
    std::vector<double> line1;
    std::vector<double> line2;
};

StabCandidateSet stab_candidates(const std::vector<WeightedPoint>& points,
                                 const LineLayout& layout, double r);

// Exact minimum piercing of a 1D interval family (right-endpoint greedy).
// Optionally records the stab positions.
int min_piercing_1d(std::vector<Interval> intervals, std::vector<double>* stabs = nullptr);

// Exact minimum number of stabs on the two parallel lines so that every
// point's reach interval on L1 or L2 is pierced. nullopt when some point
// reaches neither line or the minimum exceeds cap.
// Guards: n <= 12, cap <= 6.
std::optional<int> brute_force_min_piercing_two_lines(const std::vector<WeightedPoint>& points,
                                                      const LineLayout& layout, double r,
                                                      int cap = 6);

// Exact (k,r)-feasibility for the axis layouts (perpendicular, corner,
// T-junction). Guards: n <= 10, k <= 6.
bool brute_force_perpendicular(const std::vector<WeightedPoint>& points, double r, int k,
                               const LineLayout& layout);

// Smallest multiple of resolution that is feasible per the brute-force
// deciders. Guards as above; requires k <= 6.
double grid_search_radius(const Instance& inst, double resolution);

}  // namespace kcenter::oracle
