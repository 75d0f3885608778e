#pragma once

#include <stdexcept>
#include <string>

namespace rgc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma evaluated at a nonpositive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Conversion target exceeds the native floating-point range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Relative error against a canonical zero is undefined.
class UndefinedComparisonError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Asymptotic seed requested outside its validity region.
class SeedOutOfRegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Iteration failed to meet its residual target.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

/// Quadrature failed to converge; carries the best estimate found.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate_log10, double error_bound)
        : Error(what), estimate_log10(estimate_log10), error_bound(error_bound) {}
    double estimate_log10;  // log10 of |achieved estimate|
    double error_bound;     // relative error bound of that estimate
};

/// Saddle point failed its defining-equation residual check.
class SaddleRejectedError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

/// Phase factor too close to a zero for the magnitude to be meaningful.
class DegeneratePhaseError : public Error {
public:
    using Error::Error;
};

/// Requested index absent from the reference store.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Input sequence violates a documented consistency requirement.
class InconsistentInputError : public Error {
public:
    using Error::Error;
};

/// Malformed CLI request.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace rgc
