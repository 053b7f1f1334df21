#pragma once

#include <stdexcept>
#include <string>

namespace bargheat {

/// Argument outside the mathematical domain of an operation (non-positive
/// order, t <= 0 for a kernel, step larger than the probe time, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An integral whose Gaussian envelope does not decay.
class DivergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller mixed incompatible values (real-side function fed to a complex-side
/// operator, sums of PolyGauss values with different exponents, ...).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A truncated series did not reach the requested accuracy.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

  private:
    double estimate_;
};

/// Malformed text input (init grammar, PolyGauss records, config files).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace bargheat
