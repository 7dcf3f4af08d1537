#include "srblab/map.hpp"

#include <algorithm>
#include <cmath>

#include "map_impl.hpp"

namespace srblab {

std::string family_name(Family f) {
    switch (f) {
        case Family::GeometricLorenz: return "geometric-lorenz";
        case Family::Belykh: return "belykh";
        case Family::StackedLorenz: return "stacked-lorenz";
        case Family::LorenzTypeGeneric: return "lorenz-type-generic";
    }
    return "unknown";
}

SingularMap::SingularMap(std::shared_ptr<const detail::MapImpl> impl)
    : impl_(std::move(impl)) {}

SingularMap SingularMap::geometric_lorenz(const GeometricLorenzParams& p) {
    return SingularMap(detail::make_geometric_lorenz_impl(p));
}

SingularMap SingularMap::belykh(const BelykhParams& p) {
    return SingularMap(detail::make_belykh_impl(p));
}

SingularMap SingularMap::stacked_lorenz(const StackedParams& p) {
    return SingularMap(detail::make_stacked_impl(p));
}

SingularMap SingularMap::lorenz_type(GenericLorenzSpec spec) {
    return SingularMap(detail::make_generic_impl(std::move(spec)));
}

Family SingularMap::family() const { return impl_->family(); }
std::string SingularMap::description() const { return impl_->description(); }
int SingularMap::branch_count() const { return impl_->branch_count(); }
int SingularMap::branch_index(Point2 p) const { return impl_->branch_index(p); }

Point2 SingularMap::branch_eval(int branch, Point2 p) const {
    return impl_->branch_eval(branch, p);
}

Mat2 SingularMap::branch_jacobian(int branch, Point2 p) const {
    return impl_->branch_jacobian(branch, p);
}

namespace {

constexpr double kEscapeTolerance = 1e-9;

} // namespace

std::optional<Point2> SingularMap::eval(Point2 p) const {
    if (!in_closure(p)) {
        throw DomainError("eval: point outside the closed square");
    }
    const int b = impl_->branch_index(p);
    if (b < 0) return std::nullopt;
    Point2 q = impl_->branch_eval(b, p);
    const double overshoot =
        std::max(std::fabs(q.x), std::fabs(q.y)) - 1.0;
    if (overshoot > kEscapeTolerance) {
        throw Error("eval: image escaped the square (formula or parameter bug)");
    }
    q.x = std::clamp(q.x, -1.0, 1.0);
    q.y = std::clamp(q.y, -1.0, 1.0);
    return q;
}

std::optional<Mat2> SingularMap::jacobian(Point2 p) const {
    if (!in_closure(p)) {
        throw DomainError("jacobian: point outside the closed square");
    }
    const int b = impl_->branch_index(p);
    if (b < 0) return std::nullopt;
    return impl_->branch_jacobian(b, p);
}

double SingularMap::singular_distance(Point2 p, bool include_boundary) const {
    double d = point_segments_distance(p, impl_->singular);
    if (include_boundary) {
        d = std::min(d, std::max(0.0, boundary_distance(p)));
    }
    return d;
}

const SegmentList& SingularMap::singular_set() const { return impl_->singular; }

SegmentList SingularMap::n_minus() const { return impl_->n_minus(); }

bool SingularMap::boundary_in_domain() const { return impl_->boundary_in_domain(); }

std::optional<Rect> SingularMap::branch_domain_rect(int branch) const {
    return impl_->branch_domain_rect(branch);
}

const std::vector<BranchBlowupMeta>& SingularMap::blowup_meta() const {
    return impl_->blowup;
}

int SingularMap::level_count() const { return impl_->level_count(); }

Rect SingularMap::level_rect(int level) const { return impl_->level_rect(level); }

Point2 SingularMap::level_to_base(int level, Point2 p) const {
    if (impl_->family() != Family::StackedLorenz) {
        throw UnsupportedError("level_to_base: not a stacked map");
    }
    return stacked_conjugacy(level, p);
}

Point2 SingularMap::base_to_level(int level, Point2 p) const {
    if (impl_->family() != Family::StackedLorenz) {
        throw UnsupportedError("base_to_level: not a stacked map");
    }
    return stacked_conjugacy_inverse(level, p);
}

const GeometricLorenzParams* SingularMap::lorenz_params() const {
    return impl_->lorenz_params();
}

const BelykhParams* SingularMap::belykh_params() const {
    return impl_->belykh_params();
}

const StackedParams* SingularMap::stacked_params() const {
    return impl_->stacked_params();
}

} // namespace srblab
