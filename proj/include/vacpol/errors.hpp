#pragma once

#include <stdexcept>
#include <string>

namespace vacpol {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: domain violations, broken positivity, malformed boundary data.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// u sits on one of the simple poles u = d - 1 - 2l of the continued polarization.
class PoleError : public ParameterError {
public:
    PoleError(const std::string& what, double pole)
        : ParameterError(what), pole_(pole) {}
    double pole() const noexcept { return pole_; }

private:
    double pole_;
};

/// A massless limit that has no finite value for the requested configuration.
class InfraredDivergence : public Error {
public:
    using Error::Error;
};

/// Quadrature or fit did not reach its tolerance. Carries the best estimate seen.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

}  // namespace vacpol
