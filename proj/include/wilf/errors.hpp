#pragma once

#include <stdexcept>
#include <string>

namespace wilf {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (bad arguments).
struct DomainError : Error {
    using Error::Error;
};

/// The computation itself cannot be carried out (scale, precision, data).
struct ComputeError : Error {
    using Error::Error;
};

struct NotInvertibleError : DomainError {
    using DomainError::DomainError;
};

struct DenominatorNotCoprimeError : DomainError {
    using DomainError::DomainError;
};

struct ModuliNotCoprimeError : DomainError {
    using DomainError::DomainError;
};

struct InvalidParamsError : DomainError {
    using DomainError::DomainError;
};

struct KTooSmallError : DomainError {
    using DomainError::DomainError;
};

struct NotPrimitiveRootError : DomainError {
    using DomainError::DomainError;
};

struct NotCoprimeError : DomainError {
    using DomainError::DomainError;
};

struct InvalidAError : DomainError {
    using DomainError::DomainError;
};

struct ZeroConstantError : ComputeError {
    using ComputeError::ComputeError;
};

struct DegenerateReductionError : ComputeError {
    using ComputeError::ComputeError;
};

/// p (or another size parameter) exceeds what the exact path supports.
struct UnsupportedScaleError : ComputeError {
    using ComputeError::ComputeError;
};

/// A product that the theorems guarantee to be integral came out fractional.
struct NotIntegralError : ComputeError {
    using ComputeError::ComputeError;
};

/// Dokshitzer's condition fails, so integer coefficients are not guaranteed.
struct IntegralityConditionUnmetError : ComputeError {
    using ComputeError::ComputeError;
};

/// Nearest-integer rounding of a numeric polynomial exceeded the tolerance.
struct RoundingFailureError : ComputeError {
    double deviation;
    RoundingFailureError(const std::string& what, double dev)
        : ComputeError(what), deviation(dev) {}
};

/// Neither identity of Theorem 1 held; signals a bug, never expected.
struct TheoremViolationError : ComputeError {
    using ComputeError::ComputeError;
};

/// A cached polynomial failed its fresh-prime integrity check.
struct CacheCorruptError : ComputeError {
    unsigned long long failing_prime;
    CacheCorruptError(const std::string& what, unsigned long long q)
        : ComputeError(what), failing_prime(q) {}
};

struct InsufficientModulusError : ComputeError {
    using ComputeError::ComputeError;
};

}  // namespace wilf
