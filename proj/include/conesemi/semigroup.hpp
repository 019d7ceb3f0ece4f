#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "conesemi/cone.hpp"
#include "conesemi/numerical.hpp"
#include "conesemi/point.hpp"
#include "conesemi/rational.hpp"

namespace conesemi {

/// C-semigroup: the lattice points of a cone minus a finite gap set that
/// leaves the complement closed under addition.
class CSemigroup {
 public:
  /// Validates and canonicalises the gap list. Throws GapOutsideCone,
  /// ZeroGap, or NotClosed (witness: gap, a, b with a + b = gap and both
  /// a, b in S).
  static CSemigroup make(Cone cone, std::vector<Point> gaps);

  const Cone& cone() const noexcept { return cone_; }
  std::size_t dim() const noexcept { return cone_.dim(); }
  std::span<const Point> gaps() const noexcept { return gaps_; }
  std::size_t genus() const noexcept { return gaps_.size(); }
  /// Largest gap weight, 0 when there are no gaps.
  std::int64_t max_gap_weight() const noexcept { return max_gap_weight_; }

  bool is_gap(const Point& x) const;
  /// x in S: x lies in the cone and is not a gap.
  bool contains(const Point& x) const;

  friend bool operator==(const CSemigroup&, const CSemigroup&) = default;

 private:
  CSemigroup(Cone cone, std::vector<Point> gaps);

  Cone cone_;
  std::vector<Point> gaps_;
  std::int64_t max_gap_weight_ = 0;
};

CSemigroup make_csemigroup(Cone cone, std::vector<Point> gaps);

inline bool member(const CSemigroup& s, const Point& x) { return s.contains(x); }

/// x <=_S y, i.e. y - x in S.
bool induced_leq(const CSemigroup& s, const Point& x, const Point& y);

/// Partial order used for maximal elements of the gap set.
enum class Order { Cone, Induced };

/// Minimal generating set, equal to the minimal elements of S \ {0} under
/// the induced order. Canonically sorted.
std::vector<Point> minimal_generators(const CSemigroup& s);

/// Upper bound on the weight of any minimal generator; every nonzero
/// element of heavier weight decomposes inside S.
std::int64_t generator_weight_bound(const CSemigroup& s);

/// Maximal gaps under <=_C (default) or <=_S.
std::vector<Point> frobenius_set(const CSemigroup& s, Order order = Order::Cone);

/// Gaps h with h + (S \ {0}) contained in S. Throws EmptyGapSet for genus 0.
std::vector<Point> pseudo_frobenius(const CSemigroup& s);

/// {a in S : a - b is a gap}. Requires b in S \ {0}.
std::vector<Point> apery_set(const CSemigroup& s, const Point& b);

/// Gaps that are the unique maximum of the gap set for some strictly
/// positive weight vector. Throws EmptyGapSet for genus 0.
std::vector<Point> frobenius_elements(const CSemigroup& s);

/// Strictly positive integer weight vector that makes `f` the unique
/// heaviest gap, if one exists.
std::optional<std::vector<std::int64_t>> separating_weights(const CSemigroup& s, const Point& f);

/// Levels t whose weight plane meets S and avoids the Frobenius set.
CofiniteNat weight_set(const CSemigroup& s);

/// max w(F) / min w(F) over the Frobenius set. Throws EmptyGapSet.
Rational quasi_elasticity(const CSemigroup& s);

/// Numerical semigroup {k : k * r_i in S} on extremal ray i.
NumericalSemigroup ray_restriction(const CSemigroup& s, std::size_t ray);

}  // namespace conesemi
