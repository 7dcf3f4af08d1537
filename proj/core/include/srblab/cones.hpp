#ifndef SRBLAB_CONES_HPP
#define SRBLAB_CONES_HPP

#include <cstdint>

#include "srblab/map.hpp"
#include "srblab/report.hpp"

namespace srblab {

enum class ConeAxis { Vertical, Horizontal };

/// A constant cone around the vertical or horizontal direction:
/// vertical means {v : |v_x| <= tan * |v_y|}. half_angle_tan < 1 keeps the
/// two cones disjoint.
struct ConeSpec {
    ConeAxis center = ConeAxis::Vertical;
    double half_angle_tan = 0.5;
};

struct ConeCheckOptions {
    long samples = 100000;
    std::uint64_t seed = 0;
    double collar_eps = 1e-12;
};

/// Samples points of the square off the singular set and verifies that the
/// differential maps cone_u strictly into the image-point cone_u and the
/// inverse differential maps cone_s strictly into cone_s, recording the
/// worst expansion factor min |df v|/|v| over the cone_u boundary vectors.
/// Pass requires every sample to satisfy both inclusions with expansion
/// factor > 1. Inconclusive when samples == 0 or more than 1% of the draws
/// fall in the collar or excluded region.
CheckReport cone_check(const SingularMap& map, ConeSpec cone_u, ConeSpec cone_s,
                       const ConeCheckOptions& opt);
CheckReport cone_check(const SingularMap& map, ConeSpec cone_u, ConeSpec cone_s,
                       long samples, std::uint64_t seed);

} // namespace srblab

#endif
