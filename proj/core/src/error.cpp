#include "mmi/error.hpp"

namespace mmi {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotNegativeDefinite: return "NotNegativeDefinite";
    case Errc::BadOffDiagonal: return "BadOffDiagonal";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotTree: return "NotTree";
    case Errc::NonIntegralSelfIntersection: return "NonIntegralSelfIntersection";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAntinef: return "NotAntinef";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::NotAJumpingPoint: return "NotAJumpingPoint";
    case Errc::NonIntegralTotal: return "NonIntegralTotal";
    case Errc::InequalityViolated: return "InequalityViolated";
    case Errc::OffsetTooLarge: return "OffsetTooLarge";
    case Errc::DirectionOrthogonal: return "DirectionOrthogonal";
    case Errc::HorizonTooSmall: return "HorizonTooSmall";
    case Errc::BoxTooSmall: return "BoxTooSmall";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::RationalFormatError: return "RationalFormatError";
    case Errc::Usage: return "Usage";
    case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

ErrorCategory category_of(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError:
    case Errc::SchemaError:
    case Errc::RationalFormatError:
    case Errc::Usage:
      return ErrorCategory::Usage;
    case Errc::NonIntegralResult:
    case Errc::NonIntegralTotal:
    case Errc::InequalityViolated:
    case Errc::InternalConsistency:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Validation;
  }
}

}  // namespace mmi
