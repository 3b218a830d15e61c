#pragma once

#include <stdexcept>
#include <string>

namespace pintana {

// Invalid user input (shapes, divisibility, unknown keys). Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Numerical breakdown. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError {
public:
  SingularMatrixError(const std::string& what, double pivot)
      : NumericalError(what), pivot_(pivot) {}
  double pivot() const noexcept { return pivot_; }

private:
  double pivot_;
};

// Raised only when a caller asks for strict handling of the zero frequency
// in the Stokes-type symbol (the default substitutes an identity projector).
class DegenerateFrequency : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace pintana
