#include "conesemi/error.hpp"

namespace conesemi {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidCone: return "InvalidCone";
    case ErrorCode::GapOutsideCone: return "GapOutsideCone";
    case ErrorCode::ZeroGap: return "ZeroGap";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::EmptyGapSet: return "EmptyGapSet";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::InvalidRay: return "InvalidRay";
    case ErrorCode::InvalidGenerators: return "InvalidGenerators";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::ConeMismatch: return "ConeMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PointOutsideCone: return "PointOutsideCone";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::DegeneratePattern: return "DegeneratePattern";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace conesemi
