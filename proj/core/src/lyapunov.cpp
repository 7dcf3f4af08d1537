#include "srblab/lyapunov.hpp"

#include <algorithm>
#include <cmath>

namespace srblab {

LyapunovEstimate lyapunov_spectrum(const SingularMap& map, Point2 x0,
                                   const LyapunovOptions& opt) {
    if (opt.renorm_interval < 1) {
        throw DomainError("lyapunov_spectrum: renorm_interval >= 1 required");
    }
    Vec2 v1{1.0, 0.0};
    Vec2 v2{0.0, 1.0};
    double sum1 = 0.0, sum2 = 0.0;
    double worst_gram = 0.0;
    long since_renorm = 0;

    auto renormalize = [&]() {
        const double r1 = norm(v1);
        v1 = (1.0 / r1) * v1;
        const double r12 = dot(v1, v2);
        v2 = v2 - r12 * v1;
        const double r2 = norm(v2);
        v2 = (1.0 / r2) * v2;
        sum1 += std::log(r1);
        sum2 += std::log(r2);
        const double g = std::max({std::fabs(dot(v1, v1) - 1.0),
                                   std::fabs(dot(v2, v2) - 1.0),
                                   std::fabs(dot(v1, v2))});
        worst_gram = std::max(worst_gram, g);
        since_renorm = 0;
    };

    Point2 prev = x0;
    const OrbitTail tail =
        run_orbit(map, x0, opt.n, opt.collar_eps, [&](long, int b, Point2 q) {
            const Mat2 j = map.branch_jacobian(b, prev);
            v1 = j * v1;
            v2 = j * v2;
            prev = q;
            if (++since_renorm == opt.renorm_interval) renormalize();
        });

    if (since_renorm > 0) renormalize();

    LyapunovEstimate est;
    est.n_steps = tail.steps_taken;
    est.renorm_interval = opt.renorm_interval;
    est.completed = tail.termination == Termination::Completed;
    est.max_gram_deviation = worst_gram;
    if (tail.steps_taken > 0) {
        const double a = sum1 / static_cast<double>(tail.steps_taken);
        const double b = sum2 / static_cast<double>(tail.steps_taken);
        est.lambda_u = std::max(a, b);
        est.lambda_s = std::min(a, b);
    }
    return est;
}

LyapunovEstimate lyapunov_spectrum(const SingularMap& map, Point2 x0, long n,
                                   int renorm_interval) {
    LyapunovOptions opt;
    opt.n = n;
    opt.renorm_interval = renorm_interval;
    return lyapunov_spectrum(map, x0, opt);
}

} // namespace srblab
