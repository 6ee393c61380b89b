#pragma once

#include <stdexcept>
#include <string>

namespace cframe {

enum class ErrorKind {
  SpecMismatch,
  LengthMismatch,
  ShapeMismatch,
  NotSelfAdjoint,
  NoConvergence,
  NotPositive,
  SingularBelowCutoff,
  NotAProjection,
  EmptyFrame,
  ElementOutsideModule,
  NotAFrame,
  NotNormalizedTight,
  NotADecomposition,
  NotAPartialIsometry,
  NotOrthonormalBasis,
  NotCommutative,
  NotInteger,
  IdentityFailed,
  GridOutOfRange,
  InsufficientJ,
  DegenerateInstance,
  ParseError,
  IoError,
};

const char* error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cframe
