#include "srblab/orbit.hpp"

#include <cmath>

#include "srblab/parallel.hpp"

namespace srblab {

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::Completed: return "completed";
        case Termination::SingularCollar: return "singular_collar";
        case Termination::Escaped: return "escaped";
    }
    return "unknown";
}

OrbitRecord iterate(const SingularMap& map, Point2 x0, const IterateOptions& opt) {
    if (!in_closure(x0)) {
        throw DomainError("iterate: x0 outside the closed square");
    }
    if (opt.n < 1) {
        throw DomainError("iterate: n >= 1 required");
    }
    if (opt.collar_eps < 0.0) {
        throw DomainError("iterate: collar_eps >= 0 required");
    }
    OrbitRecord rec;
    rec.initial = x0;
    rec.branch_counts.assign(static_cast<std::size_t>(map.branch_count()), 0);
    if (opt.record_points) {
        rec.points.reserve(static_cast<std::size_t>(opt.n / std::max<long>(1, opt.thin)));
    }
    const long thin = std::max<long>(1, opt.thin);
    const OrbitTail tail =
        run_orbit(map, x0, opt.n, opt.collar_eps, [&](long k, int b, Point2 q) {
            rec.branch_counts[static_cast<std::size_t>(b)] += 1;
            if (opt.record_itinerary &&
                static_cast<long>(rec.branch_itinerary.size()) < opt.itinerary_cap) {
                rec.branch_itinerary.push_back(b);
            }
            if (opt.record_points && k % thin == 0) {
                rec.points.push_back(q);
            }
        });
    rec.steps_taken = tail.steps_taken;
    rec.termination = tail.termination;
    rec.min_singular_distance = tail.min_singular_distance;
    return rec;
}

OrbitRecord iterate(const SingularMap& map, Point2 x0, long n, double collar_eps,
                    long thin) {
    IterateOptions opt;
    opt.n = n;
    opt.collar_eps = collar_eps;
    opt.thin = thin;
    return iterate(map, x0, opt);
}

Point2 sample_initial_point(const SingularMap& map, Rng& rng, const Rect& region,
                            double collar_eps) {
    for (int tries = 0; tries < 100000; ++tries) {
        Point2 p{rng.next_in(region.xmin, region.xmax),
                 rng.next_in(region.ymin, region.ymax)};
        if (!in_closure(p)) continue;
        if (map.branch_index(p) < 0) continue;
        if (map.singular_distance(p, true) <= collar_eps) continue;
        return p;
    }
    throw Error("sample_initial_point: rejection sampling failed (region too thin?)");
}

EnsembleResult ensemble(const SingularMap& map, const EnsembleOptions& opt) {
    EnsembleResult result;
    if (opt.count < 0) {
        throw DomainError("ensemble: count >= 0 required");
    }
    if (opt.count == 0) return result;
    result.orbits.resize(static_cast<std::size_t>(opt.count));
    std::vector<long> resamples(static_cast<std::size_t>(opt.count), 0);
    std::vector<long> escapes(static_cast<std::size_t>(opt.count), 0);
    const Rect region = opt.region.value_or(square_K());

    parallel_for(static_cast<std::size_t>(opt.count), opt.workers, [&](std::size_t i) {
        Rng rng = Rng::substream(opt.seed, i);
        OrbitRecord rec;
        for (int attempt = 0; attempt <= opt.max_resamples; ++attempt) {
            const Point2 x0 = sample_initial_point(map, rng, region, opt.collar_eps);
            // Burn-in without recording.
            const OrbitTail burn =
                run_orbit(map, x0, opt.burn_in, opt.collar_eps, [](long, int, Point2) {});
            if (burn.termination != Termination::Completed) {
                if (burn.termination == Termination::Escaped) escapes[i] += 1;
                resamples[i] += 1;
                continue;
            }
            IterateOptions io;
            io.n = opt.n;
            io.collar_eps = opt.collar_eps;
            io.thin = opt.thin;
            io.record_points = opt.record_points;
            io.record_itinerary = opt.record_itinerary;
            rec = iterate(map, burn.last, io);
            if (rec.termination == Termination::Completed) break;
            if (rec.termination == Termination::Escaped) escapes[i] += 1;
            resamples[i] += 1;
        }
        result.orbits[i] = std::move(rec);
    });

    for (std::size_t i = 0; i < resamples.size(); ++i) {
        result.resample_count += resamples[i];
        result.escaped_count += escapes[i];
    }
    return result;
}

} // namespace srblab
