#pragma once
/**
 * @file errors.hpp
 * @brief Exception taxonomy for the s3surf library.
 *
 * Every failure mode raised by the library is one of the types below, all
 * deriving from s3surf::Error.  Messages carry enough context (offending
 * nodes, values, line numbers) to reproduce the failure in isolation.
 */

#include <stdexcept>
#include <string>

namespace s3surf {

/// Common base for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Inversion or normalization of a (numerically) zero quaternion.
class ZeroQuaternion : public Error {
public:
    using Error::Error;
};

/// An operation required orthogonal (or orthonormal) inputs and got none.
class NotOrthogonal : public Error {
public:
    using Error::Error;
};

/// A curve family that needs a Frenet frame has curvature below threshold.
class VanishingCurvature : public Error {
public:
    using Error::Error;
};

/// Clifford factor radii fail R1^2 + R2^2 = 1.
class BadRadii : public Error {
public:
    using Error::Error;
};

/// A finite-difference operation got fewer samples than its stencil needs.
class TooFewSamples : public Error {
public:
    using Error::Error;
};

/// Normal/binormal requested for a curve that has none (geodesic, kappa == 0).
class MissingFrame : public Error {
public:
    using Error::Error;
};

/// Tangent-trace is a great circle; the cone axis sign cannot be fixed.
class DegenerateTrace : public Error {
public:
    using Error::Error;
};

/// Surface grid hits |F| > 1 - delta at one or more nodes.
class RegularityViolation : public Error {
public:
    using Error::Error;
};

/// Finite-difference surface tangents are (numerically) parallel.
class DegenerateTangents : public Error {
public:
    using Error::Error;
};

/// Paired surfaces disagree on first-form coefficients beyond tolerance.
class GaugeMismatch : public Error {
public:
    using Error::Error;
};

/// Fundamental forms reach an umbilic point, which no surface of this
/// product class can do; the input cannot come from such a surface.
class NotATranslationSurface : public Error {
public:
    using Error::Error;
};

/// Stereographic projection input too close to the projection pole.
class PoleCollision : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent run configuration (parse and validation errors).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace s3surf
