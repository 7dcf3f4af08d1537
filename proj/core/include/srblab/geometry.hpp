#ifndef SRBLAB_GEOMETRY_HPP
#define SRBLAB_GEOMETRY_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "srblab/errors.hpp"

namespace srblab {

/// A point of the closed square [-1,1]^2. Plain aggregate; use
/// make_point() when the closure-membership invariant must be enforced
/// at construction.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// A tangent vector (unconstrained).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// 2x2 real matrix, row-major.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    Vec2 operator*(Vec2 v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }
    double det() const { return a11 * a22 - a12 * a21; }
    Mat2 inverse() const;
    bool finite() const {
        return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) &&
               std::isfinite(a22);
    }
};

/// Largest absolute entry.
double max_abs_entry(const Mat2& m);

/// Spectral (operator 2-)norm.
double operator_norm(const Mat2& m);

/// Validates finiteness and membership in the closed square; throws
/// DomainError otherwise.
Point2 make_point(double x, double y);

/// True if p lies in [-1,1]^2 (closure of K).
bool in_closure(Point2 p);

/// Distance from an interior point to the square boundary: min(1-|x|, 1-|y|).
/// Returns a negative value for points outside the closure.
double boundary_distance(Point2 p);

/// A line segment with a label. Degenerate segments (a == b) represent
/// points, which arise as one-sided limit sets; segments representing the
/// singular set N itself always have positive length.
struct Segment {
    Point2 a;
    Point2 b;
    std::string label;

    bool degenerate() const { return a.x == b.x && a.y == b.y; }
    double length() const { return std::hypot(b.x - a.x, b.y - a.y); }
};

using SegmentList = std::vector<Segment>;

/// Euclidean distance from p to the (closed) segment.
double point_segment_distance(Point2 p, const Segment& s);

/// Minimum distance from p over a list of segments; +inf for an empty list.
double point_segments_distance(Point2 p, const SegmentList& segs);

/// Minimum distance between two segments (0 if they intersect).
double segment_segment_distance(const Segment& s, const Segment& t);

/// Parameter t in [0,1] along pq of the first proper crossing of pq with s,
/// if any. Collinear overlaps report t of the closest endpoint projection.
std::optional<double> segment_crossing_parameter(Point2 p, Point2 q, const Segment& s);

/// Axis-aligned rectangle (used for sampling regions and the stacked-map
/// level geometry).
struct Rect {
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;

    bool contains(Point2 p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    bool contains_open(Point2 p) const {
        return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
    }
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

/// The closed square [-1,1]^2.
inline Rect square_K() { return Rect{-1.0, 1.0, -1.0, 1.0}; }

} // namespace srblab

#endif
