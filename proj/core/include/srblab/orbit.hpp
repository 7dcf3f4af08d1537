#ifndef SRBLAB_ORBIT_HPP
#define SRBLAB_ORBIT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "srblab/map.hpp"
#include "srblab/rng.hpp"

namespace srblab {

enum class Termination {
    Completed,
    SingularCollar,
    Escaped,
};

const char* termination_name(Termination t);

struct OrbitRecord {
    Point2 initial{};
    std::vector<Point2> points;                 // every thin-th image
    long steps_taken = 0;
    Termination termination = Termination::Completed;
    double min_singular_distance = 0.0;         // boundary included, over x0 and all images
    std::vector<std::int32_t> branch_itinerary; // recorded up to the cap
    std::vector<std::uint64_t> branch_counts;   // full per-branch visit counts
};

struct IterateOptions {
    long n = 1000;
    double collar_eps = 1e-12;
    long thin = 1;
    bool record_points = true;
    bool record_itinerary = false;
    long itinerary_cap = 1000000;
};

/// Result of the low-level orbit driver.
struct OrbitTail {
    Termination termination = Termination::Completed;
    long steps_taken = 0;
    double min_singular_distance = 0.0;
    Point2 last{};
};

/// Core singularity-aware stepper. Starting from p (whose own collar
/// distance is tested first), computes up to n images, calling
/// visit(step, branch, point) for each computed image, and stops the
/// first time an image has singular_distance(. , boundary included)
/// <= collar_eps, the start point violates the guard, a point leaves all
/// open branch domains (excluded region of a truncated stack), or an
/// image escapes the square by more than 1e-9.
template <typename Visit>
OrbitTail run_orbit(const SingularMap& map, Point2 p, long n, double collar_eps,
                    Visit&& visit) {
    OrbitTail tail;
    tail.last = p;
    tail.min_singular_distance = map.singular_distance(p, true);
    if (tail.min_singular_distance <= collar_eps) {
        tail.termination = Termination::SingularCollar;
        return tail;
    }
    for (long k = 1; k <= n; ++k) {
        const int b = map.branch_index(p);
        if (b < 0) {
            tail.termination = Termination::SingularCollar;
            return tail;
        }
        Point2 q = map.branch_eval(b, p);
        const double ox = std::fabs(q.x) - 1.0;
        const double oy = std::fabs(q.y) - 1.0;
        if (ox > 1e-9 || oy > 1e-9) {
            tail.termination = Termination::Escaped;
            tail.steps_taken = k;
            tail.last = q;
            return tail;
        }
        if (ox > 0.0) q.x = q.x > 0.0 ? 1.0 : -1.0;
        if (oy > 0.0) q.y = q.y > 0.0 ? 1.0 : -1.0;
        visit(k, b, q);
        tail.steps_taken = k;
        tail.last = q;
        const double d = map.singular_distance(q, true);
        if (d < tail.min_singular_distance) tail.min_singular_distance = d;
        if (d <= collar_eps) {
            tail.termination = Termination::SingularCollar;
            return tail;
        }
        p = q;
    }
    tail.termination = Termination::Completed;
    return tail;
}

/// Iterates the map from x0 with the collar guard active, recording every
/// thin-th image. Throws DomainError when x0 is outside the closed square.
OrbitRecord iterate(const SingularMap& map, Point2 x0, const IterateOptions& opt);
OrbitRecord iterate(const SingularMap& map, Point2 x0, long n,
                    double collar_eps = 1e-12, long thin = 1);

struct EnsembleOptions {
    long count = 1;
    std::uint64_t seed = 0;
    long n = 1000;
    long burn_in = 10000;
    double collar_eps = 1e-12;
    long thin = 1;
    bool record_points = true;
    bool record_itinerary = false;
    std::optional<Rect> region;   // sampling window, defaults to the square
    int max_resamples = 100;
    int workers = 0;              // 0 = hardware concurrency
};

struct EnsembleResult {
    std::vector<OrbitRecord> orbits;
    long resample_count = 0;   // early-terminated attempts that were redrawn
    long escaped_count = 0;    // escaped attempts (indicates a bug)
};

/// Draws count initial points uniformly from the sampling window minus the
/// collar of N+ using per-orbit substreams keyed by (seed, orbit index),
/// applies burn-in, then records n steps per orbit. Early-terminated
/// attempts are redrawn from the same substream (logged, never silent).
/// The result is bitwise independent of worker count and scheduling.
EnsembleResult ensemble(const SingularMap& map, const EnsembleOptions& opt);

/// Rejection-samples one point of `region` that lies in an open branch
/// domain with singular_distance(., boundary included) > collar_eps.
Point2 sample_initial_point(const SingularMap& map, Rng& rng, const Rect& region,
                            double collar_eps);

} // namespace srblab

#endif
