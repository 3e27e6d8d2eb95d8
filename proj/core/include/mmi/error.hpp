#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmi {

enum class Errc {
  // graph_core
  NotSymmetric,
  NotNegativeDefinite,
  BadOffDiagonal,
  Disconnected,
  NotTree,
  NonIntegralSelfIntersection,
  DivisionByZero,
  NotAntinef,
  LengthMismatch,
  // lattice
  NonIntegralResult,
  // mmi_engine / jump_analysis
  InvalidPoint,
  NotAJumpingPoint,
  NonIntegralTotal,
  InequalityViolated,
  OffsetTooLarge,
  // ray_series
  DirectionOrthogonal,
  HorizonTooSmall,
  // wall_atlas
  BoxTooSmall,
  Unsupported,
  // cli_io
  ParseError,
  SchemaError,
  RationalFormatError,
  Usage,
  // oracle disagreement; must never occur on valid data
  InternalConsistency,
};

/// How a failure maps onto the CLI exit status.
enum class ErrorCategory { Usage = 1, Validation = 2, Internal = 3 };

std::string_view errc_name(Errc code) noexcept;
ErrorCategory category_of(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  Errc code_;
};

}  // namespace mmi
