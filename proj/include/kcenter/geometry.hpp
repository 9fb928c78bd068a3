#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace kcenter {

// Relative tolerance used only when verifying emitted solutions. The
// combinatorial algorithms compare computed endpoints exactly.
inline constexpr double kVerifyEps = 1e-9;

struct WeightedPoint {
    int id = 0;       // dense, unique in [0, n)
    double x = 0.0;
    double y = 0.0;
    double w = 1.0;   // must be positive
};

// Closed segment on a constraining line. Degenerate lo == hi is a valid
// tangency interval.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double t) const { return lo <= t && t <= hi; }
    double length() const { return hi - lo; }
};

enum class LayoutKind { Parallel, Perpendicular, Corner, TJunction };

// Parallel holds two horizontal lines y = y1 (upper) and y = y2 (lower).
// The other kinds fix the constraining lines to the coordinate axes:
//   Perpendicular: full x-axis and full y-axis
//   Corner:        rays x >= 0 and y >= 0 from the origin
//   TJunction:     full x-axis and the downward ray y <= 0
struct LineLayout {
    LayoutKind kind = LayoutKind::Parallel;
    double y1 = 1.0;
    double y2 = 0.0;

    static LineLayout parallel(double upper, double lower) {
        return LineLayout{LayoutKind::Parallel, upper, lower};
    }
    static LineLayout perpendicular() { return LineLayout{LayoutKind::Perpendicular, 0, 0}; }
    static LineLayout corner() { return LineLayout{LayoutKind::Corner, 0, 0}; }
    static LineLayout t_junction() { return LineLayout{LayoutKind::TJunction, 0, 0}; }
};

struct Instance {
    std::vector<WeightedPoint> points;
    LineLayout layout;
    int k = 1;
};

// Identifies which constraining line a center sits on. For parallel layouts
// L1 is the upper line and L2 the lower one; for the axis layouts L1 is the
// x-axis and L2 the y-axis.
enum class LineTag { L1, L2 };

struct Center {
    LineTag line = LineTag::L1;
    double pos = 0.0;  // coordinate along the line
    double x = 0.0;    // planar position
    double y = 0.0;
};

struct Solution {
    double radius = 0.0;
    std::vector<Center> centers;
};

// Disk of radius r/p.w around p intersected with the horizontal line
// y = line_y. Empty (nullopt) when the disk misses the line.
std::optional<Interval> interval_on_horizontal_line(const WeightedPoint& p, double line_y, double r);

// Same with the roles of x and y swapped: intersection with x = line_x,
// returned as an interval of y coordinates.
std::optional<Interval> interval_on_vertical_line(const WeightedPoint& p, double line_x, double r);

double weighted_distance(const WeightedPoint& p, double qx, double qy);

// Closed coordinate range of a constraining line (full line or one ray).
struct CoordRange {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

// Per-layout ranges of the two axis lines; meaningless for Parallel.
CoordRange x_line_range(const LineLayout& layout);
CoordRange y_line_range(const LineLayout& layout);

std::optional<Interval> clip_interval(const std::optional<Interval>& iv, const CoordRange& range);

// Reach interval of p on the x-axis line of an axis layout, clipped to the
// available ray, and the same for the y-axis line.
std::optional<Interval> x_axis_interval(const WeightedPoint& p, double r, const LineLayout& layout);
std::optional<Interval> y_axis_interval(const WeightedPoint& p, double r, const LineLayout& layout);

// Maps a position on a constraining line to planar coordinates.
Center make_center(const LineLayout& layout, LineTag line, double pos);

struct ValidationReport {
    bool ok = true;
    std::string message;
};

// Checks weight positivity, k >= 1, layout constraints, and (for parallel
// layouts) that points are sorted by x. With sort_if_needed the instance is
// sorted in place (stable, so equal-x ties keep input id order) instead of
// reporting a sortedness error.
ValidationReport validate_instance(Instance& inst, bool sort_if_needed = false);
ValidationReport validate_instance(const Instance& inst);

struct VerifyReport {
    bool ok = true;
    std::string message;
    double worst = 0.0;  // max over points of weighted distance to nearest center
};

// Every point must be within weighted distance radius * (1 + eps) of some
// center, |centers| <= k, and every center must lie on its line/ray.
VerifyReport verify_solution(const Instance& inst, const Solution& sol, double eps = kVerifyEps);

}  // namespace kcenter
