#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace qilab {

// Bad input that the caller can fix (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure: a computation could not deliver its contract (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProfileInvalid : public ConfigError {
 public:
  ProfileInvalid(const std::string& what, double k) : ConfigError(what), k_(k) {}
  explicit ProfileInvalid(const std::string& what) : ConfigError(what) {}

  /// First offending wavenumber, or NaN for structural errors.
  double wavenumber() const noexcept { return k_; }

 private:
  double k_ = std::numeric_limits<double>::quiet_NaN();
};

class SamplerMismatch : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class WindowTooSmall : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class DimensionTooSmall : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class DegenerateAbscissae : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class ConvergenceFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Subdivision budget exhausted. Carries the best estimate so callers can still report it.
class ToleranceNotMet : public NumericalError {
 public:
  ToleranceNotMet(const std::string& what, double value, double error)
      : NumericalError(what), value_(value), error_(error) {}

  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double value_;
  double error_;
};

}  // namespace qilab
