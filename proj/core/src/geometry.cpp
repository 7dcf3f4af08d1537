#include "srblab/geometry.hpp"

#include <algorithm>
#include <limits>

namespace srblab {

Mat2 Mat2::inverse() const {
    const double d = det();
    if (d == 0.0 || !std::isfinite(d)) {
        throw DomainError("matrix not invertible");
    }
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

double max_abs_entry(const Mat2& m) {
    return std::max(std::max(std::fabs(m.a11), std::fabs(m.a12)),
                    std::max(std::fabs(m.a21), std::fabs(m.a22)));
}

double operator_norm(const Mat2& m) {
    // Largest singular value of a 2x2 matrix, closed form.
    const double a = m.a11, b = m.a12, c = m.a21, d = m.a22;
    const double q = a * a + b * b + c * c + d * d;
    const double det = a * d - b * c;
    const double disc = std::sqrt(std::max(0.0, q * q - 4.0 * det * det));
    return std::sqrt(0.5 * (q + disc));
}

Point2 make_point(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw DomainError("point coordinates must be finite");
    }
    if (x < -1.0 || x > 1.0 || y < -1.0 || y > 1.0) {
        throw DomainError("point outside the closed square [-1,1]^2");
    }
    return {x, y};
}

bool in_closure(Point2 p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && p.x >= -1.0 &&
           p.x <= 1.0 && p.y >= -1.0 && p.y <= 1.0;
}

double boundary_distance(Point2 p) {
    return std::min(1.0 - std::fabs(p.x), 1.0 - std::fabs(p.y));
}

double point_segment_distance(Point2 p, const Segment& s) {
    const Vec2 ab{s.b.x - s.a.x, s.b.y - s.a.y};
    const Vec2 ap{p.x - s.a.x, p.y - s.a.y};
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        return norm(ap);
    }
    const double t = std::clamp(dot(ap, ab) / len2, 0.0, 1.0);
    const Vec2 diff{ap.x - t * ab.x, ap.y - t * ab.y};
    return norm(diff);
}

double point_segments_distance(Point2 p, const SegmentList& segs) {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& s : segs) {
        best = std::min(best, point_segment_distance(p, s));
    }
    return best;
}

namespace {

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

} // namespace

std::optional<double> segment_crossing_parameter(Point2 p, Point2 q, const Segment& s) {
    const Vec2 r{q.x - p.x, q.y - p.y};
    const Vec2 d{s.b.x - s.a.x, s.b.y - s.a.y};
    const Vec2 w{s.a.x - p.x, s.a.y - p.y};
    const double denom = cross(r, d);
    if (denom == 0.0) {
        // Parallel. Treat collinear touching as a crossing at the nearest
        // endpoint projection so callers can still split there.
        if (cross(w, r) != 0.0) return std::nullopt;
        const double rr = dot(r, r);
        if (rr == 0.0) return std::nullopt;
        const double t0 = dot(w, r) / rr;
        const double t1 = t0 + dot(d, r) / rr;
        const double lo = std::min(t0, t1), hi = std::max(t0, t1);
        if (hi < 0.0 || lo > 1.0) return std::nullopt;
        return std::clamp(lo, 0.0, 1.0);
    }
    const double t = cross(w, d) / denom;
    const double u = cross(w, r) / denom;
    if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return std::nullopt;
    return t;
}

double segment_segment_distance(const Segment& s, const Segment& t) {
    if (segment_crossing_parameter(s.a, s.b, t)) return 0.0;
    double best = std::min(point_segment_distance(s.a, t), point_segment_distance(s.b, t));
    best = std::min(best, point_segment_distance(t.a, s));
    best = std::min(best, point_segment_distance(t.b, s));
    return best;
}

} // namespace srblab
