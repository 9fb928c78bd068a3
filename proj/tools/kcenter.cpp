// Command line front end: generate, decide, solve, bench, render.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcenter/io.hpp"
#include "kcenter/optimizer.hpp"

namespace {

using namespace kcenter;

std::string layout_flag_help() {
    return "parallel|perpendicular|corner|t_junction";
}

int run(int argc, char** argv) {
    CLI::App app{"k-center solver with centers constrained to two lines"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a deterministic random instance");
    io::GenParams params;
    std::string kind_name = "parallel";
    std::string gen_out;
    gen->add_option("--n", params.n, "number of points");
    gen->add_option("--seed", params.seed, "generator seed");
    gen->add_option("--kind", kind_name, layout_flag_help());
    gen->add_option("--spread", params.spread, "extent along the lines");
    gen->add_option("--band", params.band, "half-width of the reachable bands");
    gen->add_option("--y1", params.y1, "upper parallel line");
    gen->add_option("--y2", params.y2, "lower parallel line");
    gen->add_option("--wmin", params.wmin, "minimum weight (parallel only)");
    gen->add_option("--wmax", params.wmax, "maximum weight (parallel only)");
    gen->add_option("--k", params.k, "number of centers");
    gen->add_option("--out", gen_out, "write to file instead of stdout");

    // decide
    auto* dec = app.add_subcommand("decide", "test (k,r)-feasibility");
    std::string dec_instance;
    double dec_radius = 0.0;
    bool dec_json = false, dec_stable = false;
    dec->add_option("--instance", dec_instance, "instance file")->required();
    dec->add_option("--radius", dec_radius, "radius to test")->required();
    dec->add_flag("--json", dec_json, "emit a result document");
    dec->add_flag("--stable", dec_stable, "zero out timing for reproducible output");

    // solve
    auto* sol = app.add_subcommand("solve", "minimize the covering radius");
    std::string sol_instance, sol_out;
    double sol_tol = 1e-9;
    bool sol_exact = false, sol_json = false, sol_stable = false;
    sol->add_option("--instance", sol_instance, "instance file")->required();
    sol->add_option("--tol", sol_tol, "relative radius tolerance");
    sol->add_flag("--exact-candidates", sol_exact, "search candidate radii (parallel layouts)");
    sol->add_flag("--json", sol_json, "emit a result document");
    sol->add_flag("--stable", sol_stable, "zero out timing for reproducible output");
    sol->add_option("--out", sol_out, "write the result to a file as well");

    // bench
    auto* ben = app.add_subcommand("bench", "time the deciders, CSV on stdout");
    std::string sizes_csv = "8192,16384,32768,65536,131072";
    std::uint64_t ben_seed = 1;
    int ben_repeats = 5;
    bool ben_axes = false;
    ben->add_option("--sizes", sizes_csv, "comma separated instance sizes");
    ben->add_option("--seed", ben_seed, "generator seed");
    ben->add_option("--repeats", ben_repeats, "timed repetitions per size");
    ben->add_flag("--axes", ben_axes, "also time the perpendicular decider");

    // render
    auto* ren = app.add_subcommand("render", "draw an instance (and result) as SVG");
    std::string ren_instance, ren_result, ren_out;
    ren->add_option("--instance", ren_instance, "instance file")->required();
    ren->add_option("--result", ren_result, "result file with centers");
    ren->add_option("--out", ren_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // input error
    }

    if (gen->parsed()) {
        auto k = [&]() -> LayoutKind {
            if (kind_name == "parallel") return LayoutKind::Parallel;
            if (kind_name == "perpendicular") return LayoutKind::Perpendicular;
            if (kind_name == "corner") return LayoutKind::Corner;
            if (kind_name == "t_junction") return LayoutKind::TJunction;
            throw io::ParseError("unknown kind \"" + kind_name + "\"");
        }();
        params.kind = k;
        if (k != LayoutKind::Parallel) {
            params.wmin = params.wmax = 1.0;
        }
        const std::string text = io::emit_instance(io::generate_instance(params));
        if (gen_out.empty())
            std::cout << text;
        else
            io::write_file(gen_out, text);
        return 0;
    }

    if (dec->parsed()) {
        const Instance inst = io::parse_instance(io::read_file(dec_instance));
        const auto t0 = std::chrono::steady_clock::now();
        const FeasibilityResult res = decide(inst, dec_radius);
        const auto t1 = std::chrono::steady_clock::now();

        io::ResultDoc doc;
        doc.feasible = res.feasible;
        doc.radius = dec_radius;
        doc.min_count = res.min_count;
        if (res.solution) doc.centers = res.solution->centers;
        doc.n = inst.points.size();
        doc.decider_calls = 1;
        doc.elapsed_ms =
            dec_stable ? 0.0 : std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (dec_json) {
            std::cout << io::emit_result(doc);
        } else {
            std::cout << (res.feasible ? "feasible" : "infeasible");
            if (res.min_count) std::cout << ", min piercing count " << *res.min_count;
            std::cout << "\n";
        }
        return res.feasible ? 0 : 1;
    }

    if (sol->parsed()) {
        const Instance inst = io::parse_instance(io::read_file(sol_instance));
        SolveOptions opts;
        opts.rel_tol = sol_tol;
        opts.exact_candidates = sol_exact;
        const auto t0 = std::chrono::steady_clock::now();
        const SolveOutcome outcome = solve(inst, opts);
        const auto t1 = std::chrono::steady_clock::now();

        io::ResultDoc doc;
        doc.feasible = true;
        doc.radius = outcome.solution.radius;
        doc.centers = outcome.solution.centers;
        doc.n = inst.points.size();
        doc.decider_calls = outcome.decider_calls;
        doc.elapsed_ms =
            sol_stable ? 0.0 : std::chrono::duration<double, std::milli>(t1 - t0).count();
        const std::string text = io::emit_result(doc);
        if (sol_json)
            std::cout << text;
        else
            std::cout << "radius " << outcome.solution.radius << " with "
                      << outcome.solution.centers.size() << " centers\n";
        if (!sol_out.empty()) io::write_file(sol_out, text);
        return 0;
    }

    if (ben->parsed()) {
        std::vector<std::size_t> sizes;
        std::size_t pos = 0;
        while (pos < sizes_csv.size()) {
            const auto comma = sizes_csv.find(',', pos);
            const auto token = sizes_csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                                : comma - pos);
            if (!token.empty()) sizes.push_back(std::stoull(token));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (sizes.empty()) throw io::ParseError("--sizes must name at least one size");
        std::cout << io::bench_csv(io::run_bench(sizes, ben_seed, ben_repeats, ben_axes));
        return 0;
    }

    if (ren->parsed()) {
        const Instance inst = io::parse_instance(io::read_file(ren_instance));
        std::vector<std::pair<double, double>> centers;
        double radius = 0.0;
        if (!ren_result.empty()) {
            const auto res = io::parse_result(io::read_file(ren_result));
            centers = res.centers;
            if (res.radius) radius = *res.radius;
        }
        io::write_file(ren_out, io::render_svg(inst, centers, radius));
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
