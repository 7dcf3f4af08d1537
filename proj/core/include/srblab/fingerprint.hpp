#ifndef SRBLAB_FINGERPRINT_HPP
#define SRBLAB_FINGERPRINT_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "srblab/orbit.hpp"

namespace srblab {

/// A fixed basis of bounded test functions on the square.
struct Basis {
    std::string id;
    std::vector<std::function<double(Point2)>> funcs;

    std::size_t size() const { return funcs.size(); }
};

/// The default basis "trig3": cos(pi i x) cos(pi j y) for 0 <= i+j <= 3,
/// (i,j) != (0,0), ordered (0,1),(0,2),(0,3),(1,0),(1,1),(1,2),(2,0),
/// (2,1),(3,0). Nine bounded Lipschitz functions.
const Basis& default_basis();

/// Long-run time averages of the basis functions along one orbit.
struct Fingerprint {
    std::vector<double> values;
    long n_steps = 0;
    std::string basis_id;
    bool usable = true;   // false when the orbit terminated early
};

struct FingerprintOptions {
    long n = 1000000;
    long burn_in = 10000;
    double collar_eps = 1e-12;
};

/// Averages the basis along the orbit of x0 after burn-in. When the orbit
/// enters the collar early, the partial averages are returned flagged
/// unusable with n_steps set to the steps actually averaged.
Fingerprint fingerprint(const SingularMap& map, Point2 x0, const Basis& basis,
                        const FingerprintOptions& opt);
Fingerprint fingerprint(const SingularMap& map, Point2 x0, long n,
                        const Basis& basis);

/// Averages the basis over an explicit point set (the n_steps = size,
/// usable = true). Used as an independent oracle and for synthetic orbits.
Fingerprint fingerprint_from_points(std::span<const Point2> points, const Basis& basis);

struct EnsembleFingerprints {
    std::vector<Fingerprint> fingerprints;
    long resample_count = 0;
};

/// One fingerprint per sampled orbit, with the ensemble seeding,
/// resampling, and determinism rules of ensemble().
EnsembleFingerprints ensemble_fingerprints(const SingularMap& map,
                                           const EnsembleOptions& opt,
                                           const Basis& basis);

} // namespace srblab

#endif
