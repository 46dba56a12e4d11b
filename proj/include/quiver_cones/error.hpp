#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace qcones {

enum class ErrorKind {
  DuplicateId,
  DanglingEndpoint,
  OrientedCycle,
  NotSelfInverse,
  AxiomViolation,
  Overflow,
  NotAntiSymmetric,
  NotSymmetricDimension,
  BadParameter,
  SyntaxError,
  DimensionMismatch,
  DimensionTooLarge,
  LPNumericalInvariantViolation,
};

const char* to_string(ErrorKind kind);

/// Every recoverable failure in the library. `line()` is set for errors
/// raised while parsing a quiver file.
class QuiverError : public std::runtime_error {
 public:
  QuiverError(ErrorKind kind, const std::string& message, std::optional<int> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> line() const noexcept { return line_; }
  /// The message without the kind and line prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::optional<int> line_;
};

}  // namespace qcones
