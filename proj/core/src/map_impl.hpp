#ifndef SRBLAB_MAP_IMPL_HPP
#define SRBLAB_MAP_IMPL_HPP

#include <memory>

#include "srblab/map.hpp"

namespace srblab::detail {

class MapImpl {
public:
    virtual ~MapImpl() = default;

    virtual Family family() const = 0;
    virtual std::string description() const = 0;
    virtual int branch_count() const = 0;
    virtual int branch_index(Point2 p) const = 0;
    virtual Point2 branch_eval(int branch, Point2 p) const = 0;
    virtual Mat2 branch_jacobian(int branch, Point2 p) const = 0;
    virtual SegmentList n_minus() const = 0;
    virtual bool boundary_in_domain() const { return false; }
    virtual std::optional<Rect> branch_domain_rect(int) const { return std::nullopt; }

    virtual const GeometricLorenzParams* lorenz_params() const { return nullptr; }
    virtual const BelykhParams* belykh_params() const { return nullptr; }
    virtual const StackedParams* stacked_params() const { return nullptr; }
    virtual int level_count() const { return 0; }
    virtual Rect level_rect(int) const {
        throw UnsupportedError("level_rect: not a stacked map");
    }

    SegmentList singular;
    std::vector<BranchBlowupMeta> blowup;
};

std::shared_ptr<const MapImpl> make_geometric_lorenz_impl(const GeometricLorenzParams& p);
std::shared_ptr<const MapImpl> make_belykh_impl(const BelykhParams& p);
std::shared_ptr<const MapImpl> make_stacked_impl(const StackedParams& p);
std::shared_ptr<const MapImpl> make_generic_impl(GenericLorenzSpec spec);

void validate_geometric_lorenz(const GeometricLorenzParams& p);
void validate_belykh(const BelykhParams& p);
void validate_stacked(const StackedParams& p);

} // namespace srblab::detail

#endif
