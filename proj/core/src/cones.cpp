#include "srblab/cones.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "srblab/rng.hpp"

namespace srblab {

namespace {

// Unit boundary vectors of a cone: (+-tan, 1)/|.| for vertical,
// (1, +-tan)/|.| for horizontal.
void boundary_vectors(ConeSpec c, Vec2 out[2]) {
    const double t = c.half_angle_tan;
    const double inv = 1.0 / std::sqrt(1.0 + t * t);
    if (c.center == ConeAxis::Vertical) {
        out[0] = {t * inv, inv};
        out[1] = {-t * inv, inv};
    } else {
        out[0] = {inv, t * inv};
        out[1] = {inv, -t * inv};
    }
}

// Along-axis and cross-axis components relative to the cone center.
double axis_component(ConeSpec c, Vec2 v) {
    return c.center == ConeAxis::Vertical ? v.y : v.x;
}
double cross_component(ConeSpec c, Vec2 v) {
    return c.center == ConeAxis::Vertical ? v.x : v.y;
}

// Strict inclusion margin: positive iff v lies strictly inside the cone.
double inclusion_margin(ConeSpec c, Vec2 v) {
    return c.half_angle_tan * std::fabs(axis_component(c, v)) -
           std::fabs(cross_component(c, v));
}

} // namespace

CheckReport cone_check(const SingularMap& map, ConeSpec cone_u, ConeSpec cone_s,
                       const ConeCheckOptions& opt) {
    CheckReport rep;
    rep.condition = CheckCondition::CONES;
    if (!(cone_u.half_angle_tan > 0.0 && cone_u.half_angle_tan < 1.0) ||
        !(cone_s.half_angle_tan > 0.0 && cone_s.half_angle_tan < 1.0)) {
        throw DomainError("cone_check: half_angle_tan must lie in (0,1)");
    }
    if (cone_u.center == cone_s.center) {
        throw DomainError("cone_check: cones must be centered on complementary axes");
    }
    if (opt.samples <= 0) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes = "no samples requested";
        return rep;
    }

    Vec2 bu[2], bs[2];
    boundary_vectors(cone_u, bu);
    boundary_vectors(cone_s, bs);

    long rejected = 0;
    long accepted = 0;
    double worst_expansion = std::numeric_limits<double>::infinity();
    Point2 worst_expansion_point{};
    Vec2 worst_expansion_vec{};
    double worst_u_margin = std::numeric_limits<double>::infinity();
    double worst_s_margin = std::numeric_limits<double>::infinity();
    bool inclusion_ok = true;

    for (long i = 0; i < opt.samples; ++i) {
        Rng rng = Rng::substream(opt.seed, static_cast<std::uint64_t>(i));
        Point2 p{};
        bool found = false;
        for (int tries = 0; tries < 64; ++tries) {
            p = Point2{rng.next_in(-1.0, 1.0), rng.next_in(-1.0, 1.0)};
            if (map.branch_index(p) >= 0 &&
                map.singular_distance(p, false) > opt.collar_eps) {
                found = true;
                break;
            }
            ++rejected;
        }
        if (!found) continue;
        ++accepted;

        const Mat2 j = *map.jacobian(p);
        const Mat2 jinv = j.inverse();

        // Unstable cone: forward images of boundary vectors stay strictly
        // inside (and on a consistent side), and stretch by more than 1.
        const Vec2 w0 = j * bu[0];
        const Vec2 w1 = j * bu[1];
        const double m0 = inclusion_margin(cone_u, w0);
        const double m1 = inclusion_margin(cone_u, w1);
        const double mmin = std::min(m0, m1);
        if (mmin < worst_u_margin) worst_u_margin = mmin;
        const bool same_side = axis_component(cone_u, w0) * axis_component(cone_u, w1) > 0.0;
        if (mmin <= 0.0 || !same_side) {
            inclusion_ok = false;
            if (rep.witnesses.size() < 8) {
                rep.witnesses.push_back({0, p, mmin});
            }
        }
        const double e = std::min(norm(w0), norm(w1));
        if (e < worst_expansion) {
            worst_expansion = e;
            worst_expansion_point = p;
            worst_expansion_vec = norm(w0) < norm(w1) ? bu[0] : bu[1];
        }

        // Stable cone under the inverse differential.
        const Vec2 s0 = jinv * bs[0];
        const Vec2 s1 = jinv * bs[1];
        const double n0 = inclusion_margin(cone_s, s0);
        const double n1 = inclusion_margin(cone_s, s1);
        const double nmin = std::min(n0, n1);
        if (nmin < worst_s_margin) worst_s_margin = nmin;
        const bool s_same_side =
            axis_component(cone_s, s0) * axis_component(cone_s, s1) > 0.0;
        if (nmin <= 0.0 || !s_same_side) {
            inclusion_ok = false;
            if (rep.witnesses.size() < 8) {
                rep.witnesses.push_back({0, p, nmin});
            }
        }
    }

    const double total_draws = static_cast<double>(accepted + rejected);
    const double rejected_fraction =
        total_draws > 0.0 ? static_cast<double>(rejected) / total_draws : 1.0;

    rep.margins["worst_unstable_expansion"] = worst_expansion;
    rep.margins["worst_unstable_inclusion_margin"] = worst_u_margin;
    rep.margins["worst_stable_inclusion_margin"] = worst_s_margin;
    rep.margins["rejected_fraction"] = rejected_fraction;
    rep.margins["accepted_samples"] = static_cast<double>(accepted);

    if (accepted == 0 || rejected_fraction > 0.01) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes = "too many draws fell in the collar or excluded region";
        return rep;
    }

    const bool expansion_ok = worst_expansion > 1.0;
    rep.verdict = (inclusion_ok && expansion_ok) ? Verdict::Pass : Verdict::Fail;
    std::ostringstream os;
    os << "worst expansion " << worst_expansion << " at (" << worst_expansion_point.x
       << ", " << worst_expansion_point.y << ") along boundary vector ("
       << worst_expansion_vec.x << ", " << worst_expansion_vec.y << ")";
    if (!expansion_ok && rep.witnesses.size() < 8) {
        rep.witnesses.push_back({0, worst_expansion_point, worst_expansion});
    }
    rep.notes = os.str();
    return rep;
}

CheckReport cone_check(const SingularMap& map, ConeSpec cone_u, ConeSpec cone_s,
                       long samples, std::uint64_t seed) {
    ConeCheckOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    return cone_check(map, cone_u, cone_s, opt);
}

} // namespace srblab
