#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "kcenter/io.hpp"
#include "kcenter/optimizer.hpp"

using namespace kcenter;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(KCENTER_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.output.append(buf, got);
    const int status = pclose(pipe);
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/kcenter_test_") + name;
}

bool points_equal(const Instance& a, const Instance& b) {
    if (a.points.size() != b.points.size() || a.k != b.k || a.layout.kind != b.layout.kind)
        return false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const auto& p = a.points[i];
        const auto& q = b.points[i];
        if (p.id != q.id || p.x != q.x || p.y != q.y || p.w != q.w) return false;
    }
    if (a.layout.kind == LayoutKind::Parallel)
        return a.layout.y1 == b.layout.y1 && a.layout.y2 == b.layout.y2;
    return true;
}

}  // namespace

TEST_CASE("instance round trip is exact") {
    io::SplitMix64 rng(41);
    for (int it = 0; it < 30; ++it) {
        io::GenParams params;
        params.kind = static_cast<LayoutKind>(rng.next() % 4);
        params.n = rng.next() % 10;
        params.seed = rng.next();
        if (params.kind != LayoutKind::Parallel) params.wmin = params.wmax = 1.0;
        const Instance inst = io::generate_instance(params);
        const Instance back = io::parse_instance(io::emit_instance(inst));
        CHECK(points_equal(inst, back));
        // second round trip is byte identical
        CHECK(io::emit_instance(back) == io::emit_instance(inst));
    }
    SUBCASE("awkward doubles survive") {
        Instance inst;
        inst.layout = LineLayout::parallel(1.0 / 3.0, -1e-17);
        inst.k = 2;
        inst.points = {{0, 0.1, 1e300, 5e-324}};
        const Instance back = io::parse_instance(io::emit_instance(inst));
        CHECK(points_equal(inst, back));
    }
}

TEST_CASE("instance parsing is strict") {
    CHECK_THROWS_AS(io::parse_instance("not json"), io::ParseError);
    CHECK_THROWS_AS(io::parse_instance(R"({"layout": {"kind": "parallel", "y1": 1, "y2": 0},
        "k": 1, "points": [], "extra": 1})"),
                    io::ParseError);
    CHECK_THROWS_AS(io::parse_instance(R"({"layout": {"kind": "perpendicular", "y1": 1},
        "k": 1, "points": []})"),
                    io::ParseError);
    CHECK_THROWS_AS(io::parse_instance(R"({"layout": {"kind": "parallel", "y1": 1, "y2": 0},
        "k": 1, "points": [{"x": 0, "y": 0, "weight": 2}]})"),
                    io::ParseError);
    CHECK_THROWS_AS(io::parse_instance(R"({"layout": {"kind": "parallel", "y1": 1, "y2": 0},
        "k": 1.5, "points": []})"),
                    io::ParseError);
    // weight defaults to one
    const auto inst = io::parse_instance(R"({"layout": {"kind": "perpendicular"},
        "k": 1, "points": [{"x": 1, "y": 2}]})");
    CHECK(inst.points.at(0).w == 1.0);
    // unsorted parallel points are sorted on parse
    const auto sorted = io::parse_instance(R"({"layout": {"kind": "parallel", "y1": 1, "y2": 0},
        "k": 1, "points": [{"x": 5, "y": 0}, {"x": 1, "y": 0}]})");
    CHECK(sorted.points.front().x == 1.0);
}

TEST_CASE("generator determinism and shape") {
    io::GenParams params;
    params.kind = LayoutKind::Corner;
    params.n = 25;
    params.seed = 7;
    params.wmin = params.wmax = 1.0;
    const auto a = io::generate_instance(params);
    const auto b = io::generate_instance(params);
    CHECK(io::emit_instance(a) == io::emit_instance(b));
    CHECK(validate_instance(a).ok);

    params.seed = 8;
    CHECK(io::emit_instance(a) != io::emit_instance(io::generate_instance(params)));

    params.n = 0;
    const auto empty = io::generate_instance(params);
    CHECK(empty.points.empty());
    CHECK_NOTHROW(io::parse_instance(io::emit_instance(empty)));
}

TEST_CASE("result documents") {
    io::ResultDoc doc;
    doc.feasible = true;
    doc.radius = 1.5;
    doc.min_count = 2;
    doc.centers = {make_center(LineLayout::perpendicular(), LineTag::L1, 3.0)};
    doc.n = 4;
    doc.decider_calls = 9;
    const std::string text = io::emit_result(doc);
    const auto parsed = io::parse_result(text);
    CHECK(parsed.feasible);
    CHECK(*parsed.radius == 1.5);
    CHECK(*parsed.min_count == 2);
    REQUIRE(parsed.centers.size() == 1);
    CHECK(parsed.centers[0].first == 3.0);
    CHECK(parsed.centers[0].second == 0.0);
}

TEST_CASE("svg rendering") {
    SUBCASE("one radius circle per center") {
        Instance inst;
        inst.layout = LineLayout::perpendicular();
        inst.k = 2;
        inst.points = {{0, 1, 0.5, 1}, {1, -2, 0.25, 1}};
        Solution sol;
        sol.radius = 1.0;
        sol.centers = {make_center(inst.layout, LineTag::L1, 1.0),
                       make_center(inst.layout, LineTag::L1, -2.0)};
        const std::string svg = io::render_svg(inst, sol);
        CHECK(svg.find("<svg") == 0);
        std::size_t circles = 0, pos = 0;
        while ((pos = svg.find("stroke=\"crimson\"", pos)) != std::string::npos) {
            ++circles;
            pos += 1;
        }
        CHECK(circles == sol.centers.size());
    }
    SUBCASE("empty instance draws the lines only") {
        Instance inst;
        inst.layout = LineLayout::corner();
        inst.k = 1;
        const std::string svg = io::render_svg(inst, {}, 0.0);
        CHECK(svg.find("<line") != std::string::npos);
        CHECK(svg.find("steelblue") == std::string::npos);
        // corner draws two rays that meet at the origin
        std::size_t lines = 0, pos = 0;
        while ((pos = svg.find("<line", pos)) != std::string::npos) {
            ++lines;
            pos += 1;
        }
        CHECK(lines == 2);
    }
}

TEST_CASE("bench csv") {
    const auto rows = io::run_bench({256, 512}, 3, 2, true);
    REQUIRE(rows.size() == 4);
    const std::string csv = io::bench_csv(rows);
    CHECK(csv.rfind("n,algorithm,mean_ms,stddev_ms\n", 0) == 0);
    CHECK(csv.find("256,parallel,") != std::string::npos);
    CHECK(csv.find("512,perpendicular,") != std::string::npos);
    for (const auto& row : rows) CHECK(row.mean_ms >= 0.0);
}

TEST_CASE("cli round trips and exit codes") {
    const std::string inst_path = temp_path("inst.json");

    SUBCASE("gen is deterministic and decide distinguishes feasibility") {
        const auto gen1 = run_cli("gen --n 8 --seed 42 --kind parallel --y1 3 --y2 0");
        const auto gen2 = run_cli("gen --n 8 --seed 42 --kind parallel --y1 3 --y2 0");
        CHECK(gen1.exit_code == 0);
        CHECK(gen1.output == gen2.output);
        io::write_file(inst_path, gen1.output);

        // frozen from the reference implementations: unreachable at r = 1.25,
        // five stabs at r = 3 (above the generated k = 3), three at r = 5
        const auto dec_low = run_cli("decide --instance " + inst_path + " --radius 1.25 --json");
        CHECK(dec_low.exit_code == 1);
        CHECK(dec_low.output.find("\"feasible\": false") != std::string::npos);

        const auto dec_mid = run_cli("decide --instance " + inst_path + " --radius 3 --json");
        CHECK(dec_mid.exit_code == 1);
        CHECK(dec_mid.output.find("\"min_count\": 5") != std::string::npos);

        const auto dec_high = run_cli("decide --instance " + inst_path + " --radius 5 --json");
        CHECK(dec_high.exit_code == 0);
        CHECK(dec_high.output.find("\"min_count\": 3") != std::string::npos);
    }

    SUBCASE("solve output is byte deterministic under --stable") {
        const auto gen = run_cli("gen --n 6 --seed 9 --kind perpendicular");
        io::write_file(inst_path, gen.output);
        const auto s1 = run_cli("solve --instance " + inst_path + " --json --stable");
        const auto s2 = run_cli("solve --instance " + inst_path + " --json --stable");
        CHECK(s1.exit_code == 0);
        CHECK(s1.output == s2.output);
        CHECK(s1.output.find("\"elapsed_ms\": 0") != std::string::npos);

        // the emitted result verifies against the instance
        const auto parsed = io::parse_result(s1.output);
        const auto inst = io::parse_instance(gen.output);
        Solution sol;
        sol.radius = *parsed.radius;
        for (const auto& [x, y] : parsed.centers) {
            Center c;
            c.line = (y == 0.0) ? LineTag::L1 : LineTag::L2;
            c.pos = (y == 0.0) ? x : y;
            c.x = x;
            c.y = y;
            sol.centers.push_back(c);
        }
        CHECK(verify_solution(inst, sol).ok);
    }

    SUBCASE("tangency instance flips feasibility across the radius") {
        io::write_file(inst_path, R"({"layout": {"kind": "parallel", "y1": 2, "y2": 0},
            "k": 1, "points": [{"x": 0, "y": 1, "w": 1}]})");
        const auto yes = run_cli("decide --instance " + inst_path + " --radius 1 --json");
        CHECK(yes.exit_code == 0);
        CHECK(yes.output.find("\"feasible\": true") != std::string::npos);
        CHECK(yes.output.find("\"min_count\": 1") != std::string::npos);
        const auto no = run_cli("decide --instance " + inst_path + " --radius 0.5 --json");
        CHECK(no.exit_code == 1);
        CHECK(no.output.find("\"feasible\": false") != std::string::npos);
    }

    SUBCASE("parse failures exit with code 2") {
        io::write_file(inst_path, "{broken");
        CHECK(run_cli("decide --instance " + inst_path + " --radius 1").exit_code == 2);
        CHECK(run_cli("decide --instance /nonexistent.json --radius 1").exit_code == 2);
        CHECK(run_cli("decide --radius 1").exit_code == 2);
    }

    SUBCASE("render emits an svg file") {
        const auto gen = run_cli("gen --n 4 --seed 3 --kind t_junction");
        io::write_file(inst_path, gen.output);
        const std::string res_path = temp_path("res.json");
        const std::string svg_path = temp_path("fig.svg");
        CHECK(run_cli("solve --instance " + inst_path + " --json --stable --out " + res_path)
                  .exit_code == 0);
        CHECK(run_cli("render --instance " + inst_path + " --result " + res_path + " --out " +
                      svg_path)
                  .exit_code == 0);
        const std::string svg = io::read_file(svg_path);
        CHECK(svg.find("<svg") == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
}
