#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conesemi {

enum class ErrorCode {
  DimensionMismatch,
  CapacityExceeded,
  Overflow,
  InvalidCone,
  GapOutsideCone,
  ZeroGap,
  NotClosed,
  EmptyGapSet,
  NotAMember,
  ZeroShift,
  InvalidRay,
  InvalidGenerators,
  NotCofinite,
  ConeMismatch,
  BudgetExceeded,
  PointOutsideCone,
  ZeroPoint,
  InvalidPattern,
  DegeneratePattern,
  UnsupportedDimension,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every module. `witness()` carries the lattice
/// points that certify the failure (e.g. the offending decomposition for
/// NotClosed), as raw coordinate vectors.
class Error : public std::runtime_error {
 public:
  using Coords = std::vector<std::int64_t>;

  Error(ErrorCode code, const std::string& message, std::vector<Coords> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::vector<Coords>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Coords> witness_;
};

}  // namespace conesemi
