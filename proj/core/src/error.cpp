#include "openmarkov/error.hpp"

namespace openmarkov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CodMismatch: return "CodMismatch";
    case ErrorCode::FootMismatch: return "FootMismatch";
    case ErrorCode::NonInjectiveLeg: return "NonInjectiveLeg";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotInfinitesimalStochastic: return "NotInfinitesimalStochastic";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotLumpable: return "NotLumpable";
    case ErrorCode::InvalidSection: return "InvalidSection";
    case ErrorCode::SharedBoundaryMismatch: return "SharedBoundaryMismatch";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::NotIntertwining: return "NotIntertwining";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace openmarkov
