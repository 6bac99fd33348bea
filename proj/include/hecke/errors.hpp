#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base class for everything thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Field operation on an invalid scalar (division by zero, zero denominator).
class InvalidScalar : public Error {
 public:
  using Error::Error;
};

// Inversion or relation check requested for a non-invertible matrix.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Operand shapes are incompatible.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Operands live on different space models.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

// Representations have different ranks.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A stated precondition on the arguments does not hold.
class ConditionNotMet : public Error {
 public:
  using Error::Error;
};

// Descending recursion fed with data that is not an eigensheaf restriction.
class DecompositionMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed run configuration; `path` locates the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An internal invariant failed; maps to exit code 3 in the CLI.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
