#ifndef SRBLAB_ERRORS_HPP
#define SRBLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srblab {

/// Base class for all srblab errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point lies outside the closed square, or an operation received an
/// argument outside its geometric domain.
struct DomainError : Error {
    using Error::Error;
};

/// A map parameter violates its validity range. The message names the
/// violated inequality, e.g. "lambda2 < 2/(1+|k|) violated".
struct ParamError : Error {
    using Error::Error;
};

/// Operation not available for this map family.
struct UnsupportedError : Error {
    using Error::Error;
};

/// Two grids of different resolution were combined.
struct GridMismatchError : Error {
    using Error::Error;
};

/// An aggregate operation received no input.
struct EmptyInputError : Error {
    using Error::Error;
};

/// The tracked tangent vector underflowed during a leaf pushforward.
struct LeafCollapseError : Error {
    using Error::Error;
};

/// The initial leaf segment intersects the singular set.
struct SingularStartError : Error {
    using Error::Error;
};

/// An orbit-driven computation required a full orbit but the orbit
/// entered the singular collar.
struct OrbitTerminatedError : Error {
    using Error::Error;
};

} // namespace srblab

#endif
