#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace su11 {

enum class ErrorKind {
  Unnormalized,
  Ambiguous,
  TooFar,
  InvalidAxis,
  ExtractionFailure,
  NearBoundary,
  NotInGroup,
  ClassMismatch,
  WrongClass,
  LowerSheet,
  Blowup,
  StepTooLarge,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the Python bindings) can map it to an exit code or exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace su11
