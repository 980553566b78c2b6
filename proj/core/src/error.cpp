#include "riordan/error.hpp"

namespace riordan {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivByNonUnit: return "DivByNonUnit";
    case ErrorCode::InnerNotDelta: return "InnerNotDelta";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonSquareConstantTerm: return "NonSquareConstantTerm";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotGroupElement: return "NotGroupElement";
    case ErrorCode::SingularDiagonal: return "SingularDiagonal";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BadIndexSets: return "BadIndexSets";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotFoundWithinLimit: return "NotFoundWithinLimit";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UncanceledPole: return "UncanceledPole";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> offset)
    : std::runtime_error(message), code_(code), offset_(offset) {}

}  // namespace riordan
