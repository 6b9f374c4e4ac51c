#pragma once

#include <stdexcept>
#include <string>

namespace gaussint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands or arguments whose dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Non-PSD covariance, singular innovation, non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A request that exceeds a hard computational cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Invalid or malformed configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussint
