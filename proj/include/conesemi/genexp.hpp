#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conesemi/cone.hpp"
#include "conesemi/error.hpp"
#include "conesemi/point.hpp"
#include "conesemi/semigroup.hpp"

namespace conesemi {

/// Finite generating set inside a cone (p = 1 or p = 2).
struct GeneratorInput {
  Cone cone;
  std::vector<Point> generators;

  /// Rejects an empty list, zero generators and generators outside the
  /// cone; deduplicates and sorts canonically.
  static GeneratorInput make(Cone cone, std::vector<Point> generators);
};

struct ExpandLimits {
  /// Steps allowed when searching a lattice line for its first member.
  std::int64_t line_cap = 10'000;
  /// Largest ray-coordinate bound tried while certifying the deep region.
  std::int64_t bound_cap = 1 << 14;
};

/// Computes the gap set of <generators>. Throws ConeMismatch when an
/// extremal ray carries no generator, NotCofinite when the complement is
/// infinite (witness: the ray), and BudgetExceeded when a limit is hit.
CSemigroup expand(const GeneratorInput& input, const ExpandLimits& limits = {});

struct CofinitenessReport {
  bool is_csemigroup = false;
  std::size_t genus = 0;
  /// Error name of the failed condition, empty on success.
  std::string failure;
  std::string detail;
  /// Offending extremal ray, when the failure is tied to one.
  std::optional<Point> ray;
};

/// Decision form of expand(): NotCofinite and ConeMismatch become a false
/// report; BudgetExceeded still throws.
CofinitenessReport is_csemigroup(const GeneratorInput& input, const ExpandLimits& limits = {});

}  // namespace conesemi
