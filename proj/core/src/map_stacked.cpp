#include <cmath>
#include <sstream>

#include "map_impl.hpp"

namespace srblab::detail {

void validate_stacked(const StackedParams& p) {
    validate_geometric_lorenz(p.base);
    if (!(p.levels >= 1)) {
        throw ParamError("levels >= 1 violated");
    }
    if (!(p.levels <= 40)) {
        throw ParamError("levels <= 40 violated (deeper rectangles fall below collar resolution)");
    }
}

namespace {

// All level boundaries are exact dyadic doubles; ldexp keeps the
// conjugacy arithmetic exact.
double level_bottom(int l) { return std::ldexp(1.0, -l) - 1.0; }
double level_top(int l) { return l == 0 ? 1.0 : std::ldexp(1.0, -(l - 1)) - 1.0; }
double level_mid(int l) { return std::ldexp(3.0, -(l + 1)) - 1.0; }

class StackedImpl final : public MapImpl {
public:
    explicit StackedImpl(const StackedParams& p)
        : p_(p), base_(make_geometric_lorenz_impl(p.base)) {
        for (int l = 0; l < p_.levels; ++l) {
            std::ostringstream lbl;
            lbl << "level " << l << ":midline";
            singular.push_back(Segment{{-1.0, level_mid(l)}, {1.0, level_mid(l)}, lbl.str()});
        }
        for (int l = 0; l < p_.levels; ++l) {
            std::ostringstream lbl;
            lbl << (l == p_.levels - 1 ? "residual-top" : "separator ") ;
            if (l != p_.levels - 1) lbl << l;
            singular.push_back(
                Segment{{-1.0, level_bottom(l)}, {1.0, level_bottom(l)}, lbl.str()});
        }
        blowup.assign(2 * p_.levels, BranchBlowupMeta{});
        for (int l = 0; l < p_.levels; ++l) {
            blowup[2 * l] = base_->blowup[0];
            blowup[2 * l + 1] = base_->blowup[1];
        }
    }

    Family family() const override { return Family::StackedLorenz; }

    std::string description() const override {
        std::ostringstream os;
        os << "stacked-lorenz(levels=" << p_.levels << ", base=" << base_->description()
           << ")";
        return os.str();
    }

    int branch_count() const override { return 2 * p_.levels; }

    int branch_index(Point2 p) const override {
        if (p.x <= -1.0 || p.x >= 1.0 || p.y >= 1.0) return -1;
        if (p.y <= level_bottom(p_.levels - 1)) return -1;  // excluded residual strip
        for (int l = 0; l < p_.levels; ++l) {
            const double bot = level_bottom(l);
            if (p.y > bot) {
                if (l > 0 && p.y == level_top(l)) return -1;
                const double mid = level_mid(l);
                if (p.y == mid) return -1;
                return 2 * l + (p.y > mid ? 1 : 0);
            }
        }
        return -1;
    }

    Point2 branch_eval(int branch, Point2 p) const override {
        const int l = branch / 2;
        const int sub = branch % 2;
        const Point2 bp = stacked_conjugacy(l, p);
        const Point2 bq = base_->branch_eval(sub, bp);
        return stacked_conjugacy_inverse(l, bq);
    }

    Mat2 branch_jacobian(int branch, Point2 p) const override {
        const int l = branch / 2;
        const int sub = branch % 2;
        const Point2 bp = stacked_conjugacy(l, p);
        Mat2 j = base_->branch_jacobian(sub, bp);
        j.a12 = std::ldexp(j.a12, l + 1);
        j.a21 = std::ldexp(j.a21, -(l + 1));
        return j;
    }

    SegmentList n_minus() const override {
        SegmentList out;
        const SegmentList base_limits = base_->n_minus();
        for (int l = 0; l < p_.levels; ++l) {
            for (const Segment& s : base_limits) {
                std::ostringstream lbl;
                lbl << "level " << l << ":" << s.label;
                const Point2 a = stacked_conjugacy_inverse(l, s.a);
                const Point2 b = stacked_conjugacy_inverse(l, s.b);
                out.push_back(Segment{a, b, lbl.str()});
            }
            // Limit traces at the level's rectangle edges. These are the
            // conjugated one-sided limits of the base map as its y
            // approaches +/-1; they land on the same horizontal lines.
            {
                std::ostringstream lbl;
                lbl << "level " << l << ":bottom-edge";
                const Point2 a = stacked_conjugacy_inverse(l, base_->branch_eval(0, {-1.0, -1.0}));
                const Point2 b = stacked_conjugacy_inverse(l, base_->branch_eval(0, {1.0, -1.0}));
                out.push_back(Segment{a, b, lbl.str()});
            }
            if (l > 0) {
                std::ostringstream lbl;
                lbl << "level " << l << ":top-edge";
                const Point2 a = stacked_conjugacy_inverse(l, base_->branch_eval(1, {-1.0, 1.0}));
                const Point2 b = stacked_conjugacy_inverse(l, base_->branch_eval(1, {1.0, 1.0}));
                out.push_back(Segment{a, b, lbl.str()});
            }
        }
        return out;
    }

    std::optional<Rect> branch_domain_rect(int branch) const override {
        if (branch < 0 || branch >= 2 * p_.levels) return std::nullopt;
        const int l = branch / 2;
        if (branch % 2 == 0) {
            return Rect{-1.0, 1.0, level_bottom(l), level_mid(l)};
        }
        return Rect{-1.0, 1.0, level_mid(l), level_top(l)};
    }

    const StackedParams* stacked_params() const override { return &p_; }
    int level_count() const override { return p_.levels; }

    Rect level_rect(int l) const override {
        if (l < 0 || l >= p_.levels) {
            throw DomainError("level index out of range");
        }
        return Rect{-1.0, 1.0, level_bottom(l), level_top(l)};
    }

private:
    StackedParams p_;
    std::shared_ptr<const MapImpl> base_;
};

} // namespace

std::shared_ptr<const MapImpl> make_stacked_impl(const StackedParams& p) {
    validate_stacked(p);
    return std::make_shared<StackedImpl>(p);
}

} // namespace srblab::detail

namespace srblab {

Point2 stacked_conjugacy(int level, Point2 p) {
    return {p.x, std::ldexp(p.y + 1.0, level + 1) - 3.0};
}

Point2 stacked_conjugacy_inverse(int level, Point2 p) {
    return {p.x, std::ldexp(p.y + 3.0, -(level + 1)) - 1.0};
}

} // namespace srblab
