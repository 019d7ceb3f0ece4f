#pragma once

#include <vector>

#include "conesemi/cone.hpp"
#include "conesemi/numerical.hpp"
#include "conesemi/point.hpp"
#include "conesemi/rational.hpp"
#include "conesemi/semigroup.hpp"

namespace conesemi {

/// Removes the cone-lower sets of `points` (minus 0) from the cone. When the
/// points are pairwise <=_C-incomparable they are exactly the Frobenius set.
CSemigroup lower_set_semigroup(const Cone& cone, const std::vector<Point>& points);

/// Two-point lower-set semigroup with quasi-elasticity strictly above
/// `target`: f1 = r1 + r2 and f2 = N * r1 for the least admissible N.
CSemigroup high_elasticity(const Cone& cone, const Rational& target);

/// Idemaxial data: a two-dimensional cone and the common ray semigroup.
struct IdemaxialSpec {
  Cone cone;
  NumericalSemigroup pattern;
};

/// Level of x in ray coordinates, alpha + beta.
Rational idemaxial_level(const Cone& cone, const Point& x);

/// x is in S iff its level is an element of the pattern or exceeds the
/// pattern's Frobenius number.
CSemigroup idemaxial(const IdemaxialSpec& spec);

struct LevelBand {
  Rational lo;
  Rational hi;
};

/// Band [c - m, c] of levels (c = conductor, m = multiplicity of the
/// pattern) that contains every Frobenius-set level.
LevelBand frobenius_band(const IdemaxialSpec& spec);

struct PfLinesReport {
  std::vector<std::int64_t> pattern_pf;
  /// Gaps whose level is a pseudo-Frobenius number of the pattern.
  std::vector<Point> lines;
  std::vector<Point> pseudo_frobenius;
  /// Points of `lines` that are not pseudo-Frobenius in S.
  std::vector<Point> counterexamples;
  /// Pseudo-Frobenius elements of S that lie on none of the lines.
  std::vector<Point> off_lines;
  bool frobenius_line_contained = true;
  bool all_lines_contained = true;
};

PfLinesReport pf_lines_check(const IdemaxialSpec& spec);

}  // namespace conesemi
