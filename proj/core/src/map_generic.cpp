#include <algorithm>
#include <cmath>
#include <sstream>

#include "map_impl.hpp"

namespace srblab::detail {

namespace {

void validate_generic(const GenericLorenzSpec& s) {
    if (s.partition.size() < 2) {
        throw ParamError("partition needs at least the two endpoints -1 and 1");
    }
    if (s.partition.front() != -1.0 || s.partition.back() != 1.0) {
        throw ParamError("partition endpoints a_0 = -1, a_m+1 = 1 violated");
    }
    if (!std::is_sorted(s.partition.begin(), s.partition.end()) ||
        std::adjacent_find(s.partition.begin(), s.partition.end()) != s.partition.end()) {
        throw ParamError("partition a_0 < a_1 < ... < a_m+1 violated");
    }
    const std::size_t m_plus_1 = s.partition.size() - 1;
    if (s.branches.size() != m_plus_1) {
        throw ParamError("branch count must equal partition intervals");
    }
    if (s.limits.size() != m_plus_1 - 1) {
        throw ParamError("one declared limit pair per interior partition line required");
    }
    if (!s.blowup.empty() && s.blowup.size() != m_plus_1) {
        throw ParamError("blowup metadata must be absent or one entry per branch");
    }
    for (const GenericBranch& b : s.branches) {
        if (!b.phi || !b.psi || !b.phi_x || !b.phi_y || !b.psi_x || !b.psi_y) {
            throw ParamError("every branch needs phi, psi and their four partials");
        }
    }
}

class GenericLorenzImpl final : public MapImpl {
public:
    explicit GenericLorenzImpl(GenericLorenzSpec spec) : s_(std::move(spec)) {
        for (std::size_t i = 1; i + 1 < s_.partition.size(); ++i) {
            std::ostringstream lbl;
            lbl << "y=a" << i;
            const double a = s_.partition[i];
            singular.push_back(Segment{{-1.0, a}, {1.0, a}, lbl.str()});
        }
        blowup = s_.blowup;
    }

    Family family() const override { return Family::LorenzTypeGeneric; }

    std::string description() const override {
        std::ostringstream os;
        os << "lorenz-type-generic(m=" << singular.size() << ")";
        return os.str();
    }

    int branch_count() const override {
        return static_cast<int>(s_.branches.size());
    }

    int branch_index(Point2 p) const override {
        if (p.x <= -1.0 || p.x >= 1.0 || p.y <= -1.0 || p.y >= 1.0) return -1;
        // partition is small; linear scan.
        for (std::size_t i = 0; i + 1 < s_.partition.size(); ++i) {
            if (p.y > s_.partition[i] && p.y < s_.partition[i + 1]) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    Point2 branch_eval(int branch, Point2 p) const override {
        const GenericBranch& b = s_.branches[static_cast<std::size_t>(branch)];
        return {b.phi(p.x, p.y), b.psi(p.x, p.y)};
    }

    Mat2 branch_jacobian(int branch, Point2 p) const override {
        const GenericBranch& b = s_.branches[static_cast<std::size_t>(branch)];
        return {b.phi_x(p.x, p.y), b.phi_y(p.x, p.y), b.psi_x(p.x, p.y),
                b.psi_y(p.x, p.y)};
    }

    SegmentList n_minus() const override {
        SegmentList out;
        for (std::size_t i = 0; i < s_.limits.size(); ++i) {
            const InteriorLimit& lim = s_.limits[i];
            std::ostringstream above, below;
            above << "y=a" << (i + 1) << "+";
            below << "y=a" << (i + 1) << "-";
            const Point2 pa{lim.phi_plus, lim.psi_plus};
            const Point2 pb{lim.phi_minus, lim.psi_minus};
            out.push_back(Segment{pa, pa, above.str()});
            out.push_back(Segment{pb, pb, below.str()});
        }
        return out;
    }

    std::optional<Rect> branch_domain_rect(int branch) const override {
        if (branch < 0 || branch >= branch_count()) return std::nullopt;
        return Rect{-1.0, 1.0, s_.partition[static_cast<std::size_t>(branch)],
                    s_.partition[static_cast<std::size_t>(branch) + 1]};
    }

private:
    GenericLorenzSpec s_;
};

} // namespace

std::shared_ptr<const MapImpl> make_generic_impl(GenericLorenzSpec spec) {
    validate_generic(spec);
    return std::make_shared<GenericLorenzImpl>(std::move(spec));
}

} // namespace srblab::detail
