#pragma once

#include <stdexcept>
#include <string>

namespace nsest {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented range (alpha, q, l, exponents, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A field contains non-finite values or has inconsistent shape.
class InvalidFieldError : public Error {
public:
    using Error::Error;
};

/// Derivative order above what the stencils support (|beta| > 2).
class UnsupportedOrderError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A ratio against a zero field (or zero norm) was requested.
class UndefinedRatioError : public Error {
public:
    using Error::Error;
};

/// A generated function family violates its own constraints
/// (e.g. bump support leaving the domain).
class InvalidFamilyError : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition does not hold on the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Mutually inconsistent inputs (e.g. zero RHS with a nonzero solution).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// File or stream level failure (NSFLD1, CSV, config files).
class IoError : public Error {
public:
    using Error::Error;
};

/// Config file / CLI parameter rejected by schema validation.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The inner linear solver did not reach its residual target.
class LinearSolverStallError : public Error {
public:
    LinearSolverStallError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// The Picard iteration blew up or ran out of iterations.
class NonlinearDivergenceError : public Error {
public:
    NonlinearDivergenceError(const std::string& what, double update_norm, int iterations)
        : Error(what), update_norm_(update_norm), iterations_(iterations) {}
    double update_norm() const { return update_norm_; }
    int iterations() const { return iterations_; }

private:
    double update_norm_;
    int iterations_;
};

} // namespace nsest
