#ifndef SRBLAB_MAP_HPP
#define SRBLAB_MAP_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srblab/geometry.hpp"

namespace srblab {

enum class Family {
    GeometricLorenz,
    Belykh,
    StackedLorenz,
    LorenzTypeGeneric,
};

std::string family_name(Family f);

/// Parameters of the geometric Lorenz square map
///   phi(x,y) = (-B|y|^nu0 + B x sgn(y)|y|^nu + 1) sgn(y)
///   psi(x,y) = ((1+A)|y|^nu0 - A) sgn(y)
/// with the singular line y = 0.
struct GeometricLorenzParams {
    double A = 0.5;
    double B = 0.4;
    double nu0 = 0.8;
    double nu = 1.5;
};

/// Parameters of the piecewise-affine Belykh map with singular line y = kx.
struct BelykhParams {
    double k = 0.0;
    double lambda1 = 0.3;
    double lambda2 = 1.3;
    double mu1 = 0.3;
    double mu2 = 1.3;
};

/// A finite stack of geometric Lorenz copies embedded in the rectangles
/// P_l = (-1,1) x (2^-l - 1, 2^-(l-1) - 1), l = 0..levels-1, via the affine
/// conjugacies h_l(x,y) = (x, 2^(l+1)(y+1) - 3). The strip below the last
/// rectangle is excluded from the domain.
struct StackedParams {
    GeometricLorenzParams base;
    int levels = 3;
};

/// Derivative-blowup metadata near the lower/upper edge of one branch
/// rectangle: |d phi| ~ B (dist)^-nu_phi, |d psi| ~ C (dist)^-nu_psi.
/// Carried as declared data; never verified symbolically.
struct BranchBlowupMeta {
    double B_lower = 0.0, C_lower = 0.0, nu_phi_lower = 0.0, nu_psi_lower = 0.0;
    double B_upper = 0.0, C_upper = 0.0, nu_phi_upper = 0.0, nu_psi_upper = 0.0;
};

/// One branch of a data-driven Lorenz-type map: component functions and
/// their analytic partials on the open rectangle I x (a_i, a_i+1).
struct GenericBranch {
    std::function<double(double, double)> phi, psi;
    std::function<double(double, double)> phi_x, phi_y, psi_x, psi_y;
};

/// Declared x-independent one-sided limits at an interior partition line:
/// (phi_plus, psi_plus) approaching from above, (phi_minus, psi_minus)
/// from below.
struct InteriorLimit {
    double phi_plus = 0.0, psi_plus = 0.0;
    double phi_minus = 0.0, psi_minus = 0.0;
};

/// Data-driven Lorenz-type map on the open square with horizontal singular
/// lines y = a_1 .. a_m. One-sided limits must be supplied as data; they
/// are never inferred numerically.
struct GenericLorenzSpec {
    std::vector<double> partition;          // a_0 = -1 < a_1 < ... < a_m+1 = 1
    std::vector<GenericBranch> branches;    // one per rectangle, m+1 total
    std::vector<InteriorLimit> limits;      // one per interior line, m total
    std::vector<BranchBlowupMeta> blowup;   // optional, m+1 when present
};

namespace detail {
class MapImpl;
}

/// A piecewise-smooth map of the square with explicit singular-set
/// geometry. Immutable after construction and safe to share across
/// threads; all operations are pure functions of their inputs.
class SingularMap {
public:
    static SingularMap geometric_lorenz(const GeometricLorenzParams& p);
    static SingularMap belykh(const BelykhParams& p);
    static SingularMap stacked_lorenz(const StackedParams& p);
    static SingularMap lorenz_type(GenericLorenzSpec spec);

    Family family() const;
    std::string description() const;

    /// Applies the map. Returns nullopt (a singular hit, not a failure)
    /// when the map is undefined at p: p on a segment of N, on the square
    /// boundary for the open-square families, or in the excluded residual
    /// strip of a truncated stack. Throws DomainError when p is outside
    /// the closed square. Images are clamped to the closed square; an
    /// image outside it by more than 1e-9 throws (formula/parameter bug).
    std::optional<Point2> eval(Point2 p) const;

    /// Analytic differential of the active branch; nullopt as in eval().
    std::optional<Mat2> jacobian(Point2 p) const;

    /// Euclidean distance from p to N (and to the square boundary when
    /// include_boundary is set). Zero iff p lies on that set.
    double singular_distance(Point2 p, bool include_boundary) const;

    /// The singular set N as labeled segments, all strictly inside the
    /// closed square.
    const SegmentList& singular_set() const;

    /// Closure of the one-sided limit images of N: for each singular
    /// segment and side, the segment (or degenerate point) traced by the
    /// limit of the map as the argument approaches N from that side.
    SegmentList n_minus() const;

    int branch_count() const;

    /// Index of the open branch domain containing p, or -1 when p lies on
    /// N+, outside the domain, or in an excluded region.
    int branch_index(Point2 p) const;

    /// Branch formulas extended to the closure of their domain. Used by
    /// polyline transport and one-sided limit tracing; no domain checks.
    Point2 branch_eval(int branch, Point2 p) const;
    Mat2 branch_jacobian(int branch, Point2 p) const;

    /// True when the square boundary belongs to the map's domain (the
    /// Belykh family acts on the closed square; the Lorenz-type families
    /// act on the open square).
    bool boundary_in_domain() const;

    /// Rectangular hull of a branch domain when the family has one
    /// (all Lorenz-type families; nullopt for Belykh).
    std::optional<Rect> branch_domain_rect(int branch) const;

    /// Declared derivative-blowup metadata per branch; empty when absent.
    const std::vector<BranchBlowupMeta>& blowup_meta() const;

    // Stacked-family helpers; throw UnsupportedError for other families.
    int level_count() const;
    Rect level_rect(int level) const;
    Point2 level_to_base(int level, Point2 p) const;   // h_l
    Point2 base_to_level(int level, Point2 p) const;   // h_l^-1

    // Family parameters; nullptr when the family does not match.
    const GeometricLorenzParams* lorenz_params() const;
    const BelykhParams* belykh_params() const;
    const StackedParams* stacked_params() const;

private:
    explicit SingularMap(std::shared_ptr<const detail::MapImpl> impl);
    std::shared_ptr<const detail::MapImpl> impl_;
};

/// Exact conjugacy scale of stacked level l: y_base = 2^(l+1)(y+1) - 3.
Point2 stacked_conjugacy(int level, Point2 p);
Point2 stacked_conjugacy_inverse(int level, Point2 p);

} // namespace srblab

#endif
