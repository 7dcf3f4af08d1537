#include <cmath>
#include <sstream>

#include "map_impl.hpp"

namespace srblab::detail {

void validate_geometric_lorenz(const GeometricLorenzParams& p) {
    if (!(p.A > 0.0 && p.A < 1.0)) {
        throw ParamError("0 < A < 1 violated");
    }
    if (!(p.B > 0.0 && p.B < 0.5)) {
        throw ParamError("0 < B < 1/2 violated");
    }
    const double lower = 1.0 / (1.0 + p.A);
    if (!(p.nu0 > lower)) {
        std::ostringstream os;
        os << "nu0 > 1/(1+A) violated: " << p.nu0 << " <= " << lower;
        throw ParamError(os.str());
    }
    if (!(p.nu0 < 1.0)) {
        throw ParamError("nu0 < 1 violated");
    }
    if (!(p.nu > 1.0)) {
        throw ParamError("nu > 1 violated");
    }
}

namespace {

// Branch 0: y < 0 (sign -1). Branch 1: y > 0 (sign +1). Formulas are
// written in u = |y| with the branch's fixed sign so that evaluation
// extends continuously to the closure (u = 0 gives the one-sided limit).
class GeometricLorenzImpl final : public MapImpl {
public:
    explicit GeometricLorenzImpl(const GeometricLorenzParams& p) : p_(p) {
        singular = {Segment{{-1.0, 0.0}, {1.0, 0.0}, "y=0"}};
        BranchBlowupMeta lower_branch;  // blowup at its upper edge y -> 0-
        lower_branch.B_upper = p.B * p.nu0;
        lower_branch.C_upper = (1.0 + p.A) * p.nu0;
        lower_branch.nu_phi_upper = 1.0 - p.nu0;
        lower_branch.nu_psi_upper = 1.0 - p.nu0;
        BranchBlowupMeta upper_branch;  // blowup at its lower edge y -> 0+
        upper_branch.B_lower = p.B * p.nu0;
        upper_branch.C_lower = (1.0 + p.A) * p.nu0;
        upper_branch.nu_phi_lower = 1.0 - p.nu0;
        upper_branch.nu_psi_lower = 1.0 - p.nu0;
        blowup = {lower_branch, upper_branch};
    }

    Family family() const override { return Family::GeometricLorenz; }

    std::string description() const override {
        std::ostringstream os;
        os << "geometric-lorenz(A=" << p_.A << ", B=" << p_.B << ", nu0=" << p_.nu0
           << ", nu=" << p_.nu << ")";
        return os.str();
    }

    int branch_count() const override { return 2; }

    int branch_index(Point2 p) const override {
        if (p.x <= -1.0 || p.x >= 1.0 || p.y <= -1.0 || p.y >= 1.0) return -1;
        if (p.y == 0.0) return -1;
        return p.y > 0.0 ? 1 : 0;
    }

    Point2 branch_eval(int branch, Point2 p) const override {
        const double s = branch == 1 ? 1.0 : -1.0;
        const double u = std::fabs(p.y);
        const double u0 = std::pow(u, p_.nu0);
        const double un = std::pow(u, p_.nu);
        const double phi = s * (-p_.B * u0 + p_.B * p.x * s * un + 1.0);
        const double psi = s * ((1.0 + p_.A) * u0 - p_.A);
        return {phi, psi};
    }

    Mat2 branch_jacobian(int branch, Point2 p) const override {
        const double s = branch == 1 ? 1.0 : -1.0;
        const double u = std::fabs(p.y);
        const double u0m1 = std::pow(u, p_.nu0 - 1.0);
        const double unm1 = std::pow(u, p_.nu - 1.0);
        Mat2 j;
        j.a11 = p_.B * (u * unm1);                                    // phi_x = B u^nu
        j.a12 = -p_.B * p_.nu0 * u0m1 + s * p_.B * p.x * p_.nu * unm1; // phi_y
        j.a21 = 0.0;                                                   // psi_x
        j.a22 = (1.0 + p_.A) * p_.nu0 * u0m1;                          // psi_y
        return j;
    }

    SegmentList n_minus() const override {
        // The limits as y -> 0 from either side do not depend on x.
        const Point2 from_above{1.0, -p_.A};
        const Point2 from_below{-1.0, p_.A};
        return {Segment{from_above, from_above, "y=0+"},
                Segment{from_below, from_below, "y=0-"}};
    }

    std::optional<Rect> branch_domain_rect(int branch) const override {
        if (branch == 0) return Rect{-1.0, 1.0, -1.0, 0.0};
        if (branch == 1) return Rect{-1.0, 1.0, 0.0, 1.0};
        return std::nullopt;
    }

    const GeometricLorenzParams* lorenz_params() const override { return &p_; }

private:
    GeometricLorenzParams p_;
};

} // namespace

std::shared_ptr<const MapImpl> make_geometric_lorenz_impl(const GeometricLorenzParams& p) {
    validate_geometric_lorenz(p);
    return std::make_shared<GeometricLorenzImpl>(p);
}

} // namespace srblab::detail
