#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kcenter/geometry.hpp"

namespace kcenter::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance documents look like
//   {"layout": {"kind": "parallel", "y1": 3, "y2": 0},
//    "k": 2,
//    "points": [{"x": 1, "y": 0.5, "w": 2}, ...]}
// "w" defaults to 1; unknown fields are rejected. Parsing sorts parallel
// instances by x (stable) and validates. Numbers are emitted with 17
// significant digits so doubles round-trip exactly.
Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst);

struct ResultDoc {
    bool feasible = false;
    std::optional<double> radius;
    std::optional<int> min_count;
    std::vector<Center> centers;
    std::size_t n = 0;
    std::size_t decider_calls = 0;
    double elapsed_ms = 0.0;
};

std::string emit_result(const ResultDoc& doc);

struct ParsedResult {
    bool feasible = false;
    std::optional<double> radius;
    std::optional<int> min_count;
    std::vector<std::pair<double, double>> centers;
};

ParsedResult parse_result(const std::string& text);

// Deterministic 64-bit generator (splitmix64); doubles come from the top 53
// bits, so streams are identical across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double next_double() {  // uniform in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  private:
    std::uint64_t state_;
};

struct GenParams {
    LayoutKind kind = LayoutKind::Parallel;
    std::size_t n = 8;
    std::uint64_t seed = 0;
    double spread = 4.0;   // extent along the lines
    double band = 1.0;     // half-width of the reachable band around a line
    double y1 = 3.0;       // parallel lines
    double y2 = 0.0;
    double wmin = 0.5;     // parallel only; axis layouts are unweighted
    double wmax = 2.0;
    int k = 3;
};

// Points drawn uniformly in the bands reachable from the constraining lines.
// Identical params give byte-identical instances.
Instance generate_instance(const GenParams& params);

// Static figure: constraining lines or rays, points scaled by weight, one
// radius circle per center.
std::string render_svg(const Instance& inst, const std::vector<std::pair<double, double>>& centers,
                       double radius);
std::string render_svg(const Instance& inst, const Solution& sol);

struct BenchRow {
    std::size_t n = 0;
    std::string algorithm;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;
};

// Times the feasibility deciders on generated instances: the parallel
// decider always, the axis pipeline when include_axes is set (with its
// exact-search fallback disabled so runs stay O(n log n)).
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                int repeats, bool include_axes);

// Instance used by the parallel rows: unit weights, lines y = 1.2 and y = 0,
// x spread 0.4 per point, decided at r = 0.8.
Instance bench_parallel_instance(std::size_t n, std::uint64_t seed);
inline constexpr double kBenchParallelRadius = 0.8;

std::string bench_csv(const std::vector<BenchRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace kcenter::io
