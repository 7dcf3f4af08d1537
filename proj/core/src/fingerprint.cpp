#include "srblab/fingerprint.hpp"

#include <cmath>

#include "srblab/parallel.hpp"

namespace srblab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// cos(pi i x) cos(pi j y) through degree i+j <= 3 via the double-angle
// recurrences; writes the nine products into out.
inline void trig3_eval(Point2 p, double* out) {
    const double c1x = std::cos(kPi * p.x);
    const double c2x = 2.0 * c1x * c1x - 1.0;
    const double c3x = c1x * (2.0 * c2x - 1.0);
    const double c1y = std::cos(kPi * p.y);
    const double c2y = 2.0 * c1y * c1y - 1.0;
    const double c3y = c1y * (2.0 * c2y - 1.0);
    out[0] = c1y;
    out[1] = c2y;
    out[2] = c3y;
    out[3] = c1x;
    out[4] = c1x * c1y;
    out[5] = c1x * c2y;
    out[6] = c2x;
    out[7] = c2x * c1y;
    out[8] = c3x;
}

Basis make_trig3() {
    Basis b;
    b.id = "trig3";
    static const int idx[9][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1},
                                  {1, 2}, {2, 0}, {2, 1}, {3, 0}};
    for (const auto& ij : idx) {
        const int i = ij[0];
        const int j = ij[1];
        b.funcs.push_back([i, j](Point2 p) {
            return std::cos(kPi * i * p.x) * std::cos(kPi * j * p.y);
        });
    }
    return b;
}

} // namespace

const Basis& default_basis() {
    static const Basis b = make_trig3();
    return b;
}

Fingerprint fingerprint(const SingularMap& map, Point2 x0, const Basis& basis,
                        const FingerprintOptions& opt) {
    Fingerprint fp;
    fp.basis_id = basis.id;
    const std::size_t nb = basis.size();
    fp.values.assign(nb, 0.0);

    const OrbitTail burn =
        run_orbit(map, x0, opt.burn_in, opt.collar_eps, [](long, int, Point2) {});
    if (burn.termination != Termination::Completed) {
        fp.usable = false;
        return fp;
    }

    std::vector<double> sums(nb, 0.0);
    const bool fast = basis.id == "trig3" && nb == 9;
    const OrbitTail tail =
        run_orbit(map, burn.last, opt.n, opt.collar_eps, [&](long, int, Point2 q) {
            if (fast) {
                double v[9];
                trig3_eval(q, v);
                for (std::size_t f = 0; f < 9; ++f) sums[f] += v[f];
            } else {
                for (std::size_t f = 0; f < nb; ++f) sums[f] += basis.funcs[f](q);
            }
        });

    fp.n_steps = tail.steps_taken;
    fp.usable = tail.termination == Termination::Completed;
    if (tail.steps_taken > 0) {
        for (std::size_t f = 0; f < nb; ++f) {
            fp.values[f] = sums[f] / static_cast<double>(tail.steps_taken);
        }
    }
    return fp;
}

Fingerprint fingerprint(const SingularMap& map, Point2 x0, long n, const Basis& basis) {
    FingerprintOptions opt;
    opt.n = n;
    return fingerprint(map, x0, basis, opt);
}

Fingerprint fingerprint_from_points(std::span<const Point2> points, const Basis& basis) {
    if (points.empty()) {
        throw EmptyInputError("fingerprint_from_points: no points");
    }
    Fingerprint fp;
    fp.basis_id = basis.id;
    fp.n_steps = static_cast<long>(points.size());
    fp.values.assign(basis.size(), 0.0);
    for (const Point2& p : points) {
        for (std::size_t f = 0; f < basis.size(); ++f) {
            fp.values[f] += basis.funcs[f](p);
        }
    }
    for (double& v : fp.values) v /= static_cast<double>(points.size());
    return fp;
}

EnsembleFingerprints ensemble_fingerprints(const SingularMap& map,
                                           const EnsembleOptions& opt,
                                           const Basis& basis) {
    EnsembleFingerprints out;
    if (opt.count <= 0) return out;
    out.fingerprints.resize(static_cast<std::size_t>(opt.count));
    std::vector<long> resamples(static_cast<std::size_t>(opt.count), 0);
    const Rect region = opt.region.value_or(square_K());

    parallel_for(static_cast<std::size_t>(opt.count), opt.workers, [&](std::size_t i) {
        Rng rng = Rng::substream(opt.seed, i);
        Fingerprint fp;
        FingerprintOptions fo;
        fo.n = opt.n;
        fo.burn_in = opt.burn_in;
        fo.collar_eps = opt.collar_eps;
        for (int attempt = 0; attempt <= opt.max_resamples; ++attempt) {
            const Point2 x0 = sample_initial_point(map, rng, region, opt.collar_eps);
            fp = fingerprint(map, x0, basis, fo);
            if (fp.usable) break;
            resamples[i] += 1;
        }
        out.fingerprints[i] = std::move(fp);
    });

    for (long r : resamples) out.resample_count += r;
    return out;
}

} // namespace srblab
