#ifndef QCAP_ERRORS_HPP
#define QCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcap {

// Base of every error the library throws. Precondition violations and
// numerical-contract failures are kept apart so the CLI can map them to
// different exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class NonPositiveTemperature : public DomainError {
public:
    explicit NonPositiveTemperature(double t)
        : DomainError("temperature must be positive, got " + std::to_string(t) + " K") {}
};

class NonPositiveThickness : public DomainError {
public:
    explicit NonPositiveThickness(double t)
        : DomainError("dielectric thickness must be positive, got " + std::to_string(t) + " m") {}
};

class NonPositiveArea : public DomainError {
public:
    explicit NonPositiveArea(double s)
        : DomainError("capacitor area must be positive, got " + std::to_string(s) + " m^2") {}
};

class InvalidArgument : public DomainError {
public:
    using DomainError::DomainError;
};

class AmbiguousResonance : public DomainError {
public:
    using DomainError::DomainError;
};

class QuadratureFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class CutoffNotConverged : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Malformed or unknown configuration input (CLI boundary).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace qcap

#endif  // QCAP_ERRORS_HPP
