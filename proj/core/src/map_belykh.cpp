#include <cmath>
#include <sstream>

#include "map_impl.hpp"

namespace srblab::detail {

void validate_belykh(const BelykhParams& p) {
    if (!(std::fabs(p.k) < 1.0)) {
        throw ParamError("|k| < 1 violated");
    }
    if (!(p.lambda1 > 0.0 && p.lambda1 < 0.5)) {
        throw ParamError("0 < lambda1 < 1/2 violated");
    }
    if (!(p.mu1 > 0.0 && p.mu1 < 0.5)) {
        throw ParamError("0 < mu1 < 1/2 violated");
    }
    const double upper = 2.0 / (1.0 + std::fabs(p.k));
    if (!(p.lambda2 > 1.0)) {
        throw ParamError("lambda2 > 1 violated");
    }
    if (!(p.lambda2 < upper)) {
        throw ParamError("lambda2 < 2/(1+|k|) violated");
    }
    if (!(p.mu2 > 1.0)) {
        throw ParamError("mu2 > 1 violated");
    }
    if (!(p.mu2 < upper)) {
        throw ParamError("mu2 < 2/(1+|k|) violated");
    }
}

namespace {

// Branch 0: y > kx (upper), Jacobian diag(lambda1, lambda2).
// Branch 1: y < kx (lower), Jacobian diag(mu1, mu2).
// The Belykh map acts on the closed square, so the boundary belongs to
// the branch domains.
class BelykhImpl final : public MapImpl {
public:
    explicit BelykhImpl(const BelykhParams& p) : p_(p) {
        singular = {Segment{{-1.0, -p.k}, {1.0, p.k}, "y=kx"}};
    }

    Family family() const override { return Family::Belykh; }

    std::string description() const override {
        std::ostringstream os;
        os << "belykh(k=" << p_.k << ", lambda1=" << p_.lambda1
           << ", lambda2=" << p_.lambda2 << ", mu1=" << p_.mu1
           << ", mu2=" << p_.mu2 << ")";
        return os.str();
    }

    int branch_count() const override { return 2; }

    int branch_index(Point2 p) const override {
        const double s = p.y - p_.k * p.x;
        if (s > 0.0) return 0;
        if (s < 0.0) return 1;
        return -1;
    }

    Point2 branch_eval(int branch, Point2 p) const override {
        if (branch == 0) {
            return {p_.lambda1 * (p.x - 1.0) + 1.0, p_.lambda2 * (p.y - 1.0) + 1.0};
        }
        return {p_.mu1 * (p.x + 1.0) - 1.0, p_.mu2 * (p.y + 1.0) - 1.0};
    }

    Mat2 branch_jacobian(int branch, Point2) const override {
        if (branch == 0) return {p_.lambda1, 0.0, 0.0, p_.lambda2};
        return {p_.mu1, 0.0, 0.0, p_.mu2};
    }

    SegmentList n_minus() const override {
        // One-sided limits along y = kx are the affine images of the
        // singular segment under the branch formulas.
        const Point2 ua = branch_eval(0, {-1.0, -p_.k});
        const Point2 ub = branch_eval(0, {1.0, p_.k});
        const Point2 la = branch_eval(1, {-1.0, -p_.k});
        const Point2 lb = branch_eval(1, {1.0, p_.k});
        return {Segment{ua, ub, "y=kx+"}, Segment{la, lb, "y=kx-"}};
    }

    bool boundary_in_domain() const override { return true; }

    const BelykhParams* belykh_params() const override { return &p_; }

private:
    BelykhParams p_;
};

} // namespace

std::shared_ptr<const MapImpl> make_belykh_impl(const BelykhParams& p) {
    validate_belykh(p);
    return std::make_shared<BelykhImpl>(p);
}

} // namespace srblab::detail
