#pragma once

#include <cstdint>
#include <vector>

namespace conesemi {

/// Numerical semigroup (cofinite submonoid of N) stored by its gap set.
class NumericalSemigroup {
 public:
  /// The full monoid N.
  NumericalSemigroup() = default;

  /// Validates that N \ gaps is closed under addition (throws NotClosed).
  static NumericalSemigroup from_gaps(std::vector<std::int64_t> gaps);
  /// <generators>; throws NotCofinite when their gcd is not 1.
  static NumericalSemigroup from_generators(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  std::size_t genus() const noexcept { return gaps_.size(); }
  bool contains(std::int64_t n) const;

  /// Largest gap, -1 for N.
  std::int64_t frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  std::int64_t conductor() const { return frobenius() + 1; }
  /// Least positive element.
  std::int64_t multiplicity() const;
  std::vector<std::int64_t> minimal_generators() const;
  std::vector<std::int64_t> pseudo_frobenius() const;
  /// Elements below the conductor (the "left" elements), including 0.
  std::size_t left_elements() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  std::vector<std::int64_t> gaps_;
};

/// Set of the form N \ excluded with finite `excluded`.
struct CofiniteNat {
  std::vector<std::int64_t> excluded;

  bool contains(std::int64_t n) const;
  friend bool operator==(const CofiniteNat&, const CofiniteNat&) = default;
};

}  // namespace conesemi
