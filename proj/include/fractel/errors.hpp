#pragma once

#include <stdexcept>
#include <string>

namespace fractel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series or asymptotic evaluation could not reach the requested tolerance
/// inside the validated envelope.  Never silently returns NaN instead.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its panel budget before meeting tolerance.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Inconsistent or invalid configuration (parameter bundle, grid, problem data).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Sampled problem data exceeds the declared growth envelope on the
/// integration window.
class GrowthViolation : public Error {
public:
    using Error::Error;
};

/// Two fields with incompatible grids were combined.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// The linear system of a finite-difference step is degenerate.
class SingularSystem : public Error {
public:
    using Error::Error;
};

}  // namespace fractel
