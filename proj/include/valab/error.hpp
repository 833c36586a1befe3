#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valab {

enum class ErrorKind {
  ParseError,
  DimensionMismatch,
  NotSymmetric,
  NoSolution,
  NotLocal,
  NotGorenstein,
  GradingViolation,
  OutOfWeightRange,
  NotSl2Triple,
  PreconditionViolated,
  InvalidLOne,
  Inconsistent,
  NoGenerator,
  NotInSpan,
  BetaZero,
  WindowOverflow,
  MissingGorensteinData,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is an Error tagged with its kind,
/// so the CLI can map kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace valab
