#include "conesemi/construct.hpp"

#include <algorithm>
#include <set>

#include "conesemi/error.hpp"

namespace conesemi {

namespace {

Point two_dim_ray(const Cone& cone, std::size_t i) {
  if (cone.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension, "construction needs a two-dimensional cone");
  }
  return cone.rays()[i];
}

void require_pattern(const IdemaxialSpec& spec) {
  if (spec.pattern.genus() == 0) {
    throw Error(ErrorCode::DegeneratePattern, "pattern is N; there is no Frobenius level");
  }
}

}  // namespace

CSemigroup lower_set_semigroup(const Cone& cone, const std::vector<Point>& points) {
  std::set<Point> gaps;
  for (const Point& f : points) {
    if (f.dim() != cone.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
    if (f.is_zero()) throw Error(ErrorCode::ZeroPoint, "lower-set apex must be nonzero");
    if (!cone.contains(f)) {
      throw Error(ErrorCode::PointOutsideCone, f.to_string() + " is outside the cone",
                  {f.to_vector()});
    }
    for (const Point& x : cone_lower_set(cone, f)) {
      if (!x.is_zero()) gaps.insert(x);
    }
  }
  return make_csemigroup(cone, std::vector<Point>(gaps.begin(), gaps.end()));
}

CSemigroup high_elasticity(const Cone& cone, const Rational& target) {
  const Point r1 = two_dim_ray(cone, 0);
  const Point r2 = two_dim_ray(cone, 1);
  const Point f1 = r1 + r2;
  // w(N r1) / w(f1) > target; N >= 2 keeps N r1 and r1 + r2 incomparable.
  const Rational ratio = target * Rational(f1.weight()) / Rational(r1.weight());
  const std::int64_t n = std::max<std::int64_t>(ratio.floor() + 1, 2);
  return lower_set_semigroup(cone, {f1, n * r1});
}

Rational idemaxial_level(const Cone& cone, const Point& x) {
  const RayCoords rc = RayFrame(cone).coords(x);
  return rc.alpha + rc.beta;
}

CSemigroup idemaxial(const IdemaxialSpec& spec) {
  const RayFrame frame(spec.cone);
  const std::int64_t frob = spec.pattern.frobenius();
  std::vector<Point> gaps;
  if (frob > 0) {
    for (const Point& x : frame.parallelogram(Rational(frob), Rational(frob))) {
      if (x.is_zero()) continue;
      const Rational level = idemaxial_level(spec.cone, x);
      if (level > Rational(frob)) continue;
      if (!level.is_integer() || !spec.pattern.contains(level.num())) gaps.push_back(x);
    }
  }
  return make_csemigroup(spec.cone, std::move(gaps));
}

LevelBand frobenius_band(const IdemaxialSpec& spec) {
  require_pattern(spec);
  const std::int64_t c = spec.pattern.conductor();
  return {Rational(c - spec.pattern.multiplicity()), Rational(c)};
}

PfLinesReport pf_lines_check(const IdemaxialSpec& spec) {
  PfLinesReport report;
  if (spec.pattern.genus() == 0) return report;
  const CSemigroup s = idemaxial(spec);
  report.pattern_pf = spec.pattern.pseudo_frobenius();
  report.pseudo_frobenius = pseudo_frobenius(s);
  const Rational frob(spec.pattern.frobenius());
  for (const Point& h : s.gaps()) {
    const Rational level = idemaxial_level(spec.cone, h);
    if (!level.is_integer()) continue;
    if (!std::binary_search(report.pattern_pf.begin(), report.pattern_pf.end(), level.num())) {
      continue;
    }
    report.lines.push_back(h);
    const bool is_pf = std::binary_search(report.pseudo_frobenius.begin(),
                                          report.pseudo_frobenius.end(), h);
    if (!is_pf) {
      report.counterexamples.push_back(h);
      report.all_lines_contained = false;
      if (level == frob) report.frobenius_line_contained = false;
    }
  }
  std::set_difference(report.pseudo_frobenius.begin(), report.pseudo_frobenius.end(),
                      report.lines.begin(), report.lines.end(),
                      std::back_inserter(report.off_lines));
  return report;
}

}  // namespace conesemi
