#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace openmarkov {

enum class ErrorCode {
  DuplicateLabel,
  UnknownLabel,
  CodMismatch,
  FootMismatch,
  NonInjectiveLeg,
  ShapeMismatch,
  DimensionMismatch,
  NotSquare,
  NotInfinitesimalStochastic,
  BoundaryMismatch,
  NotSurjective,
  NotLumpable,
  InvalidSection,
  SharedBoundaryMismatch,
  InvalidMorphism,
  NotIntertwining,
  NonFinite,
  InvalidArgument,
  SyntaxError,
  SemanticError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this exception; `code()`
/// distinguishes the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace openmarkov
