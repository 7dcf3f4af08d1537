#ifndef SRBLAB_LYAPUNOV_HPP
#define SRBLAB_LYAPUNOV_HPP

#include "srblab/map.hpp"
#include "srblab/orbit.hpp"

namespace srblab {

struct LyapunovEstimate {
    double lambda_u = 0.0;   // nats per step, sorted descending
    double lambda_s = 0.0;
    long n_steps = 0;        // steps actually taken
    int renorm_interval = 8;
    bool completed = false;  // false when the orbit entered the collar early
    double max_gram_deviation = 0.0;  // worst frame orthonormality defect seen
};

struct LyapunovOptions {
    long n = 100000;
    int renorm_interval = 8;
    double collar_eps = 1e-12;
};

/// Propagates an orthonormal 2-frame through the analytic Jacobians with
/// Gram-Schmidt reorthonormalization every renorm_interval steps and
/// returns the time-averaged log stretch factors, sorted descending.
/// When the orbit enters the collar before n steps the estimate over the
/// steps actually taken is returned with completed = false.
LyapunovEstimate lyapunov_spectrum(const SingularMap& map, Point2 x0,
                                   const LyapunovOptions& opt);
LyapunovEstimate lyapunov_spectrum(const SingularMap& map, Point2 x0, long n,
                                   int renorm_interval = 8);

} // namespace srblab

#endif
