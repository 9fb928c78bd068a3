#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kcenter/geometry.hpp"
#include "kcenter/io.hpp"

using namespace kcenter;

TEST_CASE("interval on a horizontal line") {
    SUBCASE("3-4-5 right triangle") {
        const auto iv = interval_on_horizontal_line({0, 3, 4, 1}, 0.0, 5.0);
        REQUIRE(iv.has_value());
        CHECK(iv->lo == doctest::Approx(0.0));
        CHECK(iv->hi == doctest::Approx(6.0));
    }
    SUBCASE("tangency gives a degenerate interval") {
        const auto iv = interval_on_horizontal_line({0, 0, 2, 2}, 0.0, 4.0);
        REQUIRE(iv.has_value());
        CHECK(iv->lo == 0.0);
        CHECK(iv->hi == 0.0);
    }
    SUBCASE("disk misses the line") {
        CHECK_FALSE(interval_on_horizontal_line({0, 0, 3, 1}, 0.0, 2.0).has_value());
    }
}

TEST_CASE("interval on a vertical line") {
    SUBCASE("transposed 3-4-5") {
        const auto iv = interval_on_vertical_line({0, 4, 3, 1}, 0.0, 5.0);
        REQUIRE(iv.has_value());
        CHECK(iv->lo == doctest::Approx(0.0));
        CHECK(iv->hi == doctest::Approx(6.0));
    }
    SUBCASE("tangency") {
        const auto iv = interval_on_vertical_line({0, 1, 0, 1}, 0.0, 1.0);
        REQUIRE(iv.has_value());
        CHECK(iv->lo == 0.0);
        CHECK(iv->hi == 0.0);
    }
    SUBCASE("miss") {
        CHECK_FALSE(interval_on_vertical_line({0, 2, 0, 1}, 0.0, 1.0).has_value());
    }
}

TEST_CASE("weighted distance") {
    CHECK(weighted_distance({0, 0, 0, 2}, 3, 4) == doctest::Approx(10.0));
    CHECK(weighted_distance({0, 7, -2, 3.5}, 7, -2) == 0.0);
    CHECK(weighted_distance({0, 1, 1, 0.5}, 1, 0) == doctest::Approx(0.5));
}

TEST_CASE("instance validation") {
    Instance inst;
    inst.layout = LineLayout::parallel(2.0, 0.0);
    inst.k = 1;
    inst.points = {{0, 0, 1, 1}, {1, 2, 0.5, 2}, {2, 5, 1.5, 0.5}};
    CHECK(validate_instance(inst).ok);

    SUBCASE("zero weight is rejected with the point id") {
        inst.points[1].w = 0.0;
        const auto rep = validate_instance(inst);
        CHECK_FALSE(rep.ok);
        CHECK(rep.message.find("point 1") != std::string::npos);
    }
    SUBCASE("axis layouts require unit weights") {
        Instance perp;
        perp.layout = LineLayout::perpendicular();
        perp.k = 1;
        perp.points = {{0, 1, 1, 1}, {1, 2, 2, 2}};
        const auto rep = validate_instance(perp);
        CHECK_FALSE(rep.ok);
        CHECK(rep.message.find("point 1") != std::string::npos);
    }
    SUBCASE("unsorted parallel points are rejected or sorted on request") {
        inst.points = {{0, 5, 1, 1}, {1, 2, 0.5, 2}};
        CHECK_FALSE(validate_instance(inst).ok);
        CHECK(validate_instance(inst, true).ok);
        CHECK(inst.points.front().x == 2);
    }
    SUBCASE("k must be positive") {
        inst.k = 0;
        CHECK_FALSE(validate_instance(inst).ok);
    }
}

TEST_CASE("interval growth is monotone in r and symmetric about the projection") {
    io::SplitMix64 rng(7);
    for (int it = 0; it < 500; ++it) {
        const WeightedPoint p{0, rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0.25, 4)};
        const double line_y = rng.uniform(-2, 2);
        double r1 = rng.uniform(0, 6), r2 = rng.uniform(0, 6);
        if (r1 > r2) std::swap(r1, r2);
        const auto small = interval_on_horizontal_line(p, line_y, r1);
        const auto big = interval_on_horizontal_line(p, line_y, r2);
        if (small) {
            REQUIRE(big.has_value());
            CHECK(big->lo <= small->lo);
            CHECK(small->hi <= big->hi);
        }
        if (big) {
            CHECK(big->lo + big->hi == doctest::Approx(2 * p.x).epsilon(1e-12));
        }
    }
}

TEST_CASE("membership in the interval matches the weighted distance test") {
    io::SplitMix64 rng(8);
    for (int it = 0; it < 500; ++it) {
        const WeightedPoint p{0, rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0.25, 4)};
        const double line_y = rng.uniform(-2, 2);
        const double r = rng.uniform(0, 6);
        const double t = rng.uniform(-7, 7);
        const bool inside = [&] {
            const auto iv = interval_on_horizontal_line(p, line_y, r);
            return iv && iv->contains(t);
        }();
        const bool close = weighted_distance(p, t, line_y) <= r * (1 + 1e-12);
        CHECK(inside == close);
    }
}

TEST_CASE("solution verification") {
    Instance inst;
    inst.layout = LineLayout::parallel(2.0, 0.0);
    inst.k = 2;
    inst.points = {{0, 0, 1, 1}, {1, 4, 1, 1}};
    Solution sol;
    sol.radius = 1.0;
    sol.centers = {make_center(inst.layout, LineTag::L2, 0.0),
                   make_center(inst.layout, LineTag::L2, 4.0)};
    CHECK(verify_solution(inst, sol).ok);

    sol.centers.pop_back();
    CHECK_FALSE(verify_solution(inst, sol).ok);
}

TEST_CASE("axis interval clipping per layout") {
    const WeightedPoint p{0, -0.5, 5, 1};
    SUBCASE("corner clips the x ray away entirely") {
        CHECK_FALSE(x_axis_interval(p, 1.0, LineLayout::corner()).has_value());
        const auto iv = y_axis_interval(p, 1.0, LineLayout::corner());
        REQUIRE(iv.has_value());
        CHECK(iv->lo == doctest::Approx(5 - std::sqrt(0.75)));
        CHECK(iv->hi == doctest::Approx(5 + std::sqrt(0.75)));
    }
    SUBCASE("t-junction keeps only the downward ray") {
        const WeightedPoint q{0, 0.2, -3, 1};
        const auto iv = y_axis_interval(q, 1.0, LineLayout::t_junction());
        REQUIRE(iv.has_value());
        CHECK(iv->hi <= 0.0);
        const WeightedPoint above{0, 0.2, 3, 1};
        CHECK_FALSE(y_axis_interval(above, 1.0, LineLayout::t_junction()).has_value());
    }
}
