#pragma once

#include <stdexcept>
#include <string>

namespace camc {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An input lies outside the set where the requested quantity is defined
/// (energy domain violation, profile pole, nonpositive radius, bad parameters).
struct DomainError : Error {
    using Error::Error;
};

/// Requested parameter point lies outside a surface's parameter rectangle.
struct OutOfDomain : Error {
    using Error::Error;
};

/// |Xs x Xtheta| vanishes: the parametrization is not an immersion there.
struct DegenerateJet : Error {
    using Error::Error;
};

/// nu3^2 = 1 up to tolerance: E1 = e3 - nu3*nu vanishes and the
/// principal-direction frame is undefined (horizontal tangent plane).
struct VerticalNormalDegeneracy : Error {
    using Error::Error;
};

/// Fewer samples than a difference stencil needs.
struct GridTooSmall : Error {
    using Error::Error;
};

/// Radius r <= 0 fed to an operation that requires r > 0.
struct DegenerateRadius : Error {
    using Error::Error;
};

/// Fourier projection requested with too few samples per period.
struct AliasingRisk : Error {
    using Error::Error;
};

/// Frenet frame undefined (vanishing curvature).
struct FrameUndefined : Error {
    using Error::Error;
};

/// Newton inversion of the local graph map failed to converge.
struct NewtonDivergence : Error {
    using Error::Error;
};

/// The surface is not a local graph z(x,y) near the requested seed.
struct NotAGraph : Error {
    using Error::Error;
};

/// Schwarz-type extension not available for the requested kind/copies.
struct UnsupportedExtension : Error {
    using Error::Error;
};

}  // namespace camc
