#include "kcenter/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kcenter/feasibility.hpp"
#include "kcenter/parallel.hpp"
#include "kcenter/perpendicular.hpp"

namespace kcenter::io {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* kind_name(LayoutKind kind) {
    switch (kind) {
        case LayoutKind::Parallel: return "parallel";
        case LayoutKind::Perpendicular: return "perpendicular";
        case LayoutKind::Corner: return "corner";
        case LayoutKind::TJunction: return "t_junction";
    }
    return "?";
}

std::optional<LayoutKind> kind_from_name(const std::string& name) {
    if (name == "parallel") return LayoutKind::Parallel;
    if (name == "perpendicular") return LayoutKind::Perpendicular;
    if (name == "corner") return LayoutKind::Corner;
    if (name == "t_junction") return LayoutKind::TJunction;
    return std::nullopt;
}

void require_keys(const nlohmann::json& obj, const std::vector<std::string>& allowed,
                  const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError("unknown field \"" + key + "\" in " + where);
    }
}

double number_field(const nlohmann::json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ParseError("missing field \"" + key + "\" in " + where);
    if (!obj[key].is_number()) throw ParseError("field \"" + key + "\" in " + where + " must be a number");
    return obj[key].get<double>();
}

}  // namespace

Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance document must be an object");
    require_keys(doc, {"layout", "k", "points"}, "instance");

    if (!doc.contains("layout") || !doc["layout"].is_object())
        throw ParseError("instance requires a \"layout\" object");
    const auto& jl = doc["layout"];
    if (!jl.contains("kind") || !jl["kind"].is_string())
        throw ParseError("layout requires a string \"kind\"");
    const auto kind = kind_from_name(jl["kind"].get<std::string>());
    if (!kind) throw ParseError("unknown layout kind \"" + jl["kind"].get<std::string>() + "\"");

    Instance inst;
    inst.layout.kind = *kind;
    if (*kind == LayoutKind::Parallel) {
        require_keys(jl, {"kind", "y1", "y2"}, "layout");
        inst.layout.y1 = number_field(jl, "y1", "layout");
        inst.layout.y2 = number_field(jl, "y2", "layout");
    } else {
        require_keys(jl, {"kind"}, "layout");
        inst.layout.y1 = 0.0;
        inst.layout.y2 = 0.0;
    }

    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw ParseError("instance requires an integer \"k\"");
    inst.k = doc["k"].get<int>();

    if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError("instance requires a \"points\" array");
    int id = 0;
    for (const auto& jp : doc["points"]) {
        if (!jp.is_object()) throw ParseError("each point must be an object");
        require_keys(jp, {"x", "y", "w"}, "point");
        WeightedPoint p;
        p.id = id++;
        p.x = number_field(jp, "x", "point");
        p.y = number_field(jp, "y", "point");
        p.w = jp.contains("w") ? number_field(jp, "w", "point") : 1.0;
        inst.points.push_back(p);
    }

    auto rep = validate_instance(inst, /*sort_if_needed=*/true);
    if (!rep.ok) throw ParseError("invalid instance: " + rep.message);
    return inst;
}

std::string emit_instance(const Instance& inst) {
    std::ostringstream os;
    os << "{\n  \"layout\": {\"kind\": \"" << kind_name(inst.layout.kind) << "\"";
    if (inst.layout.kind == LayoutKind::Parallel)
        os << ", \"y1\": " << fmt(inst.layout.y1) << ", \"y2\": " << fmt(inst.layout.y2);
    os << "},\n  \"k\": " << inst.k << ",\n  \"points\": [";
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        const auto& p = inst.points[i];
        os << (i ? ",\n    " : "\n    ");
        os << "{\"x\": " << fmt(p.x) << ", \"y\": " << fmt(p.y) << ", \"w\": " << fmt(p.w) << "}";
    }
    os << (inst.points.empty() ? "]" : "\n  ]") << "\n}\n";
    return os.str();
}

std::string emit_result(const ResultDoc& doc) {
    std::ostringstream os;
    os << "{\n  \"feasible\": " << (doc.feasible ? "true" : "false");
    if (doc.radius) os << ",\n  \"radius\": " << fmt(*doc.radius);
    if (doc.min_count) os << ",\n  \"min_count\": " << *doc.min_count;
    os << ",\n  \"centers\": [";
    for (std::size_t i = 0; i < doc.centers.size(); ++i) {
        os << (i ? ",\n    " : "\n    ");
        os << "{\"x\": " << fmt(doc.centers[i].x) << ", \"y\": " << fmt(doc.centers[i].y) << "}";
    }
    os << (doc.centers.empty() ? "]" : "\n  ]");
    os << ",\n  \"stats\": {\"n\": " << doc.n << ", \"decider_calls\": " << doc.decider_calls
       << ", \"elapsed_ms\": " << fmt(doc.elapsed_ms) << "}\n}\n";
    return os.str();
}

ParsedResult parse_result(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("feasible") || !doc["feasible"].is_boolean())
        throw ParseError("result document requires boolean \"feasible\"");
    ParsedResult out;
    out.feasible = doc["feasible"].get<bool>();
    if (doc.contains("radius")) out.radius = doc["radius"].get<double>();
    if (doc.contains("min_count")) out.min_count = doc["min_count"].get<int>();
    if (doc.contains("centers")) {
        for (const auto& jc : doc["centers"])
            out.centers.emplace_back(jc.at("x").get<double>(), jc.at("y").get<double>());
    }
    return out;
}

Instance generate_instance(const GenParams& params) {
    SplitMix64 rng(params.seed);
    Instance inst;
    inst.k = params.k;
    const double span = params.spread * static_cast<double>(std::max<std::size_t>(params.n, 1));

    switch (params.kind) {
        case LayoutKind::Parallel: {
            inst.layout = LineLayout::parallel(params.y1, params.y2);
            for (std::size_t i = 0; i < params.n; ++i) {
                WeightedPoint p;
                p.x = rng.uniform(0.0, span);
                p.y = rng.uniform(params.y2, params.y1);
                p.w = rng.uniform(params.wmin, params.wmax);
                inst.points.push_back(p);
            }
            std::stable_sort(inst.points.begin(), inst.points.end(),
                             [](const WeightedPoint& a, const WeightedPoint& b) { return a.x < b.x; });
            break;
        }
        case LayoutKind::Perpendicular: {
            inst.layout = LineLayout::perpendicular();
            for (std::size_t i = 0; i < params.n; ++i) {
                WeightedPoint p;
                if (rng.next_double() < 0.5) {
                    p.x = rng.uniform(-params.spread, params.spread);
                    p.y = rng.uniform(-params.band, params.band);
                } else {
                    p.x = rng.uniform(-params.band, params.band);
                    p.y = rng.uniform(-params.spread, params.spread);
                }
                inst.points.push_back(p);
            }
            break;
        }
        case LayoutKind::Corner: {
            inst.layout = LineLayout::corner();
            for (std::size_t i = 0; i < params.n; ++i) {
                WeightedPoint p;
                if (rng.next_double() < 0.5) {
                    p.x = rng.uniform(0.0, params.spread);
                    p.y = rng.uniform(-params.band, params.band);
                } else {
                    p.x = rng.uniform(-params.band, params.band);
                    p.y = rng.uniform(0.0, params.spread);
                }
                inst.points.push_back(p);
            }
            break;
        }
        case LayoutKind::TJunction: {
            inst.layout = LineLayout::t_junction();
            for (std::size_t i = 0; i < params.n; ++i) {
                WeightedPoint p;
                if (rng.next_double() < 0.5) {
                    p.x = rng.uniform(-params.spread, params.spread);
                    p.y = rng.uniform(-params.band, params.band);
                } else {
                    p.x = rng.uniform(-params.band, params.band);
                    p.y = rng.uniform(-params.spread, 0.0);
                }
                inst.points.push_back(p);
            }
            break;
        }
    }
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        inst.points[i].id = static_cast<int>(i);
    return inst;
}

namespace {

std::string fmt_svg(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const std::vector<std::pair<double, double>>& centers,
                       double radius) {
    double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
    auto grow = [&](double x, double y, double pad) {
        xmin = std::min(xmin, x - pad);
        xmax = std::max(xmax, x + pad);
        ymin = std::min(ymin, y - pad);
        ymax = std::max(ymax, y + pad);
    };
    for (const auto& p : inst.points) grow(p.x, p.y, 0.5);
    for (const auto& [cx, cy] : centers) grow(cx, cy, std::max(radius, 0.5));
    if (inst.layout.kind == LayoutKind::Parallel) {
        grow(0.0, inst.layout.y1, 0.5);
        grow(0.0, inst.layout.y2, 0.5);
    } else {
        grow(0.0, 0.0, 0.5);
    }

    const double w = 800.0, h = 600.0;
    const double scale = std::min(w / (xmax - xmin), h / (ymax - ymin));
    auto sx = [&](double x) { return (x - xmin) * scale; };
    auto sy = [&](double y) { return h - (y - ymin) * scale; };  // y grows upward

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    auto line =
        [&](double x1, double y1, double x2, double y2) {
            os << "<line x1=\"" << fmt_svg(sx(x1)) << "\" y1=\"" << fmt_svg(sy(y1)) << "\" x2=\""
               << fmt_svg(sx(x2)) << "\" y2=\"" << fmt_svg(sy(y2))
               << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        };
    switch (inst.layout.kind) {
        case LayoutKind::Parallel:
            line(xmin, inst.layout.y1, xmax, inst.layout.y1);
            line(xmin, inst.layout.y2, xmax, inst.layout.y2);
            break;
        case LayoutKind::Perpendicular:
            line(xmin, 0, xmax, 0);
            line(0, ymin, 0, ymax);
            break;
        case LayoutKind::Corner:
            line(0, 0, xmax, 0);
            line(0, 0, 0, ymax);
            break;
        case LayoutKind::TJunction:
            line(xmin, 0, xmax, 0);
            line(0, 0, 0, ymin);
            break;
    }

    for (const auto& [cx, cy] : centers) {
        os << "<circle cx=\"" << fmt_svg(sx(cx)) << "\" cy=\"" << fmt_svg(sy(cy)) << "\" r=\""
           << fmt_svg(radius * scale) << "\" fill=\"crimson\" fill-opacity=\"0.08\" "
              "stroke=\"crimson\" stroke-width=\"1\"/>\n";
        os << "<circle cx=\"" << fmt_svg(sx(cx)) << "\" cy=\"" << fmt_svg(sy(cy))
           << "\" r=\"3\" fill=\"crimson\"/>\n";
    }
    for (const auto& p : inst.points) {
        os << "<circle cx=\"" << fmt_svg(sx(p.x)) << "\" cy=\"" << fmt_svg(sy(p.y)) << "\" r=\""
           << fmt_svg(2.0 + 1.5 * p.w) << "\" fill=\"steelblue\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const Instance& inst, const Solution& sol) {
    std::vector<std::pair<double, double>> centers;
    for (const auto& c : sol.centers) centers.emplace_back(c.x, c.y);
    return render_svg(inst, centers, sol.radius);
}

Instance bench_parallel_instance(std::size_t n, std::uint64_t seed) {
    GenParams params;
    params.kind = LayoutKind::Parallel;
    params.n = n;
    params.seed = seed;
    params.spread = 0.4;
    params.y1 = 1.2;
    params.y2 = 0.0;
    params.wmin = 1.0;
    params.wmax = 1.0;
    params.k = static_cast<int>(n);
    return generate_instance(params);
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                int repeats, bool include_axes) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    repeats = std::max(repeats, 1);

    auto add_row = [&](std::size_t n, const std::string& name, auto&& call) {
        call();  // warmup
        std::vector<double> ms;
        for (int rep = 0; rep < repeats; ++rep) {
            const auto t0 = clock::now();
            call();
            const auto t1 = clock::now();
            ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        double mean = 0.0;
        for (double v : ms) mean += v;
        mean /= static_cast<double>(ms.size());
        double var = 0.0;
        for (double v : ms) var += (v - mean) * (v - mean);
        const double stddev = ms.size() > 1 ? std::sqrt(var / static_cast<double>(ms.size() - 1)) : 0.0;
        rows.push_back(BenchRow{n, name, mean, stddev});
    };

    DecideOptions opts;
    opts.want_witness = false;
    for (std::size_t n : sizes) {
        {
            const Instance inst = bench_parallel_instance(n, seed);
            add_row(n, "parallel", [&] { (void)decide_parallel(inst, kBenchParallelRadius, opts); });
        }
        if (include_axes) {
            GenParams params;
            params.kind = LayoutKind::Perpendicular;
            params.n = n;
            params.seed = seed + 1;
            params.spread = 0.2 * static_cast<double>(n);
            params.k = static_cast<int>(n / 8 + 4);
            Instance inst = generate_instance(params);
            DecideOptions axis_opts = opts;
            axis_opts.exact_search_nodes = 0;  // keep the run O(n log n)
            add_row(n, "perpendicular", [&] { (void)decide_perpendicular(inst, 1.05, axis_opts); });
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "n,algorithm,mean_ms,stddev_ms\n";
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", r.mean_ms);
        os << r.n << "," << r.algorithm << "," << buf << ",";
        std::snprintf(buf, sizeof(buf), "%.6f", r.stddev_ms);
        os << buf << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace kcenter::io
