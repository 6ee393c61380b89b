#include "cframe/error.hpp"

namespace cframe {

const char* error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::SingularBelowCutoff: return "SingularBelowCutoff";
    case ErrorKind::NotAProjection: return "NotAProjection";
    case ErrorKind::EmptyFrame: return "EmptyFrame";
    case ErrorKind::ElementOutsideModule: return "ElementOutsideModule";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::NotNormalizedTight: return "NotNormalizedTight";
    case ErrorKind::NotADecomposition: return "NotADecomposition";
    case ErrorKind::NotAPartialIsometry: return "NotAPartialIsometry";
    case ErrorKind::NotOrthonormalBasis: return "NotOrthonormalBasis";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotInteger: return "NotInteger";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::GridOutOfRange: return "GridOutOfRange";
    case ErrorKind::InsufficientJ: return "InsufficientJ";
    case ErrorKind::DegenerateInstance: return "DegenerateInstance";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

}  // namespace cframe
