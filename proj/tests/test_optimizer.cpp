#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kcenter/io.hpp"
#include "kcenter/optimizer.hpp"
#include "kcenter/oracle.hpp"

using namespace kcenter;

namespace {

Instance make_parallel(std::vector<WeightedPoint> pts, double y1, double y2, int k) {
    Instance inst;
    inst.layout = LineLayout::parallel(y1, y2);
    inst.k = k;
    inst.points = std::move(pts);
    std::stable_sort(inst.points.begin(), inst.points.end(),
                     [](const auto& a, const auto& b) { return a.x < b.x; });
    for (std::size_t i = 0; i < inst.points.size(); ++i) inst.points[i].id = static_cast<int>(i);
    return inst;
}

Instance make_axis(LayoutKind kind, std::vector<WeightedPoint> pts, int k) {
    Instance inst;
    inst.layout.kind = kind;
    inst.k = k;
    inst.points = std::move(pts);
    for (std::size_t i = 0; i < inst.points.size(); ++i) inst.points[i].id = static_cast<int>(i);
    return inst;
}

Instance random_instance(io::SplitMix64& rng) {
    const int which = static_cast<int>(rng.next() % 4);
    Instance inst;
    const int n = 1 + static_cast<int>(rng.next() % 8);
    const int k = 1 + static_cast<int>(rng.next() % 4);
    if (which == 0) {
        std::vector<WeightedPoint> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back({i, rng.uniform(0, 10), rng.uniform(0, 3), rng.uniform(0.5, 3)});
        return make_parallel(std::move(pts), 3.0, 0.0, k);
    }
    const LayoutKind kind = which == 1   ? LayoutKind::Perpendicular
                            : which == 2 ? LayoutKind::Corner
                                         : LayoutKind::TJunction;
    std::vector<WeightedPoint> pts;
    for (int i = 0; i < n; ++i) {
        double a = rng.uniform(-4, 4), b = rng.uniform(-1.2, 1.2);
        if (kind == LayoutKind::Corner) {
            a = std::abs(a);
            b = std::abs(b);
        }
        if (kind == LayoutKind::TJunction && rng.next_double() < 0.5) a = -std::abs(a);
        if (rng.next_double() < 0.5)
            pts.push_back({i, a, b, 1});
        else
            pts.push_back({i, b, kind == LayoutKind::TJunction ? -std::abs(a) : a, 1});
    }
    return make_axis(kind, std::move(pts), k);
}

}  // namespace

TEST_CASE("initial bracket is feasible by construction") {
    SUBCASE("axis layout anchors at the origin") {
        const auto inst = make_axis(LayoutKind::Perpendicular, {{0, 3, 4, 1}, {1, -3, 4, 1}}, 1);
        const auto b = initial_bracket(inst);
        CHECK(b.lo == 0.0);
        CHECK(b.hi == doctest::Approx(5.0));
        CHECK(decide(inst, b.hi).feasible);
    }
    SUBCASE("parallel layout anchors at the leftmost point on the lower line") {
        const auto inst = make_parallel({{0, 0, 0.5, 2}}, 1.0, 0.0, 1);
        const auto b = initial_bracket(inst);
        CHECK(b.hi == doctest::Approx(1.0));
        CHECK(decide(inst, b.hi).feasible);
    }
    SUBCASE("random instances") {
        io::SplitMix64 rng(5);
        for (int it = 0; it < 60; ++it) {
            const auto inst = random_instance(rng);
            CHECK(decide(inst, initial_bracket(inst).hi).feasible);
        }
    }
}

TEST_CASE("bisection on pinned instances") {
    SUBCASE("three collinear points split two ways") {
        const auto inst = make_parallel({{0, 0, 0, 1}, {1, 4, 0, 1}, {2, 10, 0, 1}}, 100.0, 0.0, 2);
        const auto outcome = solve(inst);
        CHECK(outcome.solution.radius == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(verify_solution(inst, outcome.solution).ok);
    }
    SUBCASE("two symmetric points, one center") {
        const auto inst = make_axis(LayoutKind::Perpendicular, {{0, 5, 1, 1}, {1, 5, -1, 1}}, 1);
        const auto outcome = solve(inst);
        CHECK(outcome.solution.radius == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("points on the lines solve at radius zero") {
        const auto inst = make_axis(LayoutKind::Perpendicular, {{0, 5, 0, 1}, {1, 0, 5, 1}}, 2);
        const auto outcome = solve(inst);
        CHECK(outcome.solution.radius == 0.0);
        CHECK(verify_solution(inst, outcome.solution).ok);
    }
    SUBCASE("single point between parallel lines") {
        const auto inst = make_parallel({{0, 0, 1, 1}}, 2.0, 0.0, 1);
        const auto outcome = solve(inst);
        CHECK(outcome.solution.radius == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("bisection against a known monotone predicate") {
    // the bracket invariant (hi feasible, lo infeasible) pins the returned
    // radius to [threshold, threshold + tolerance]
    const double threshold = 1.04719755119659775;  // pi / 3
    int calls = 0;
    bool saw_violation = false;
    double last_lo = 0.0, last_hi = 10.0;
    const auto feasible = [&](double r) {
        ++calls;
        if (!(last_lo <= r && r <= last_hi)) saw_violation = true;
        const bool ok = r >= threshold;
        (ok ? last_hi : last_lo) = r;
        return ok;
    };
    const auto res = minimize_radius(feasible, Bracket{0.0, 10.0}, 1e-9);
    CHECK_FALSE(saw_violation);
    CHECK(res.radius >= threshold);
    CHECK(res.radius <= threshold + 1e-9 * 10.0 + 1e-8);
    CHECK(calls == res.iterations);
    CHECK_THROWS_AS(minimize_radius(feasible, Bracket{0.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("bisection keeps its invariant and iteration bound") {
    io::SplitMix64 rng(6);
    for (int it = 0; it < 40; ++it) {
        const auto inst = random_instance(rng);
        const auto bracket = initial_bracket(inst);
        const double rel_tol = 1e-9;
        int calls = 0;
        const auto feasible = [&](double r) {
            ++calls;
            return decide(inst, r).feasible;
        };
        if (feasible(0.0)) continue;
        const auto res = minimize_radius(feasible, bracket, rel_tol);
        CHECK(decide(inst, res.radius).feasible);
        CHECK(res.radius - 0.0 <= bracket.hi);
        // hi never increases, so the effective threshold is at least
        // rel_tol * max(1, r_hat); that caps the halving steps.
        const double width = bracket.hi - bracket.lo;
        const double threshold = rel_tol * std::max(1.0, res.radius);
        const int bound = static_cast<int>(std::ceil(std::log2(std::max(width / threshold, 2.0)))) + 2;
        CHECK(res.iterations <= bound);
    }
}

TEST_CASE("candidate radii for parallel layouts") {
    SUBCASE("pair event of two unweighted points on one line") {
        const auto inst = make_parallel({{0, 0, 0, 1}, {1, 4, 0, 1}}, 100.0, 0.0, 1);
        const auto cands = candidate_radii_parallel(inst);
        CHECK(std::any_of(cands.begin(), cands.end(),
                          [](double r) { return std::abs(r - 2.0) < 1e-9; }));
        CHECK(std::is_sorted(cands.begin(), cands.end()));
    }
    SUBCASE("tangency radius of a weighted point") {
        const auto inst = make_parallel({{0, 0, 1, 2}}, 5.0, 0.0, 1);
        const auto cands = candidate_radii_parallel(inst);
        CHECK(std::any_of(cands.begin(), cands.end(),
                          [](double r) { return std::abs(r - 2.0) < 1e-9; }));
    }
    SUBCASE("candidate search agrees with plain bisection") {
        io::SplitMix64 rng(7);
        for (int it = 0; it < 40; ++it) {
            Instance inst = make_parallel({}, 3.0, 0.0, 1 + static_cast<int>(rng.next() % 3));
            const int n = 1 + static_cast<int>(rng.next() % 6);
            for (int i = 0; i < n; ++i)
                inst.points.push_back({i, rng.uniform(0, 8), rng.uniform(0, 3), rng.uniform(0.5, 2)});
            std::stable_sort(inst.points.begin(), inst.points.end(),
                             [](const auto& a, const auto& b) { return a.x < b.x; });
            for (int i = 0; i < n; ++i) inst.points[i].id = i;

            SolveOptions exact;
            exact.exact_candidates = true;
            const double r_exact = solve(inst, exact).solution.radius;
            const double r_bisect = solve(inst).solution.radius;
            CHECK(std::abs(r_exact - r_bisect) <= 1e-8 * std::max(1.0, r_bisect));
        }
    }
}

TEST_CASE("solve emits verified witnesses and near-optimal radii") {
    io::SplitMix64 rng(8);
    for (int it = 0; it < 60; ++it) {
        const auto inst = random_instance(rng);
        const auto outcome = solve(inst);
        const auto rep = verify_solution(inst, outcome.solution);
        CHECK(rep.ok);
        if (!rep.ok) FAIL(rep.message);

        const double grid = oracle::grid_search_radius(inst, 1e-4);
        CHECK(std::abs(outcome.solution.radius - grid) <= 1e-4 + 1e-9 * outcome.solution.radius);
        CHECK(outcome.decider_calls >= 1);
    }
}
