#include "conesemi/semigroup.hpp"

#include <algorithm>
#include <string>

#include "conesemi/error.hpp"
#include "conesemi/separation.hpp"

namespace conesemi {

namespace {

Error::Coords coords_of(const Point& p) { return p.to_vector(); }

void require_dim(const CSemigroup& s, const Point& x) {
  if (x.dim() != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "point " + x.to_string() + " does not match semigroup dimension " +
                    std::to_string(s.dim()));
  }
}

void require_gaps(const CSemigroup& s) {
  if (s.genus() == 0) throw Error(ErrorCode::EmptyGapSet, "semigroup has no gaps");
}

// Calls fn(point) for every point of N^p with weight t.
template <typename Fn>
bool any_on_level(std::size_t dim, std::int64_t t, Fn&& fn) {
  switch (dim) {
    case 1:
      return fn(Point{t});
    case 2:
      for (std::int64_t a = 0; a <= t; ++a) {
        if (fn(Point{a, t - a})) return true;
      }
      return false;
    default:
      for (std::int64_t a = 0; a <= t; ++a) {
        for (std::int64_t b = 0; b <= t - a; ++b) {
          if (fn(Point{a, b, t - a - b})) return true;
        }
      }
      return false;
  }
}

// Candidate region for minimal generators. Along each extremal ray i with
// ray multiplicity m_i, an element whose i-th ray coordinate exceeds
// m_i + max(0, largest i-th coordinate of a gap) decomposes as
// (x - m_i r_i) + m_i r_i inside S.
std::vector<Point> generator_candidates(const CSemigroup& s, std::int64_t* max_weight) {
  const Cone& cone = s.cone();
  const std::size_t rays = cone.rays().size();
  std::vector<std::int64_t> mult(rays);
  for (std::size_t i = 0; i < rays; ++i) mult[i] = ray_restriction(s, i).multiplicity();

  if (cone.dim() == 2) {
    RayFrame frame(cone);
    Rational top[2] = {Rational(0), Rational(0)};
    for (const Point& h : s.gaps()) {
      for (std::size_t i = 0; i < 2; ++i) top[i] = std::max(top[i], frame.along(i, h));
    }
    Rational alpha_max = top[0] + Rational(mult[0]);
    Rational beta_max = top[1] + Rational(mult[1]);
    if (max_weight) {
      *max_weight = (alpha_max * Rational(frame.ray(0).weight()) +
                     beta_max * Rational(frame.ray(1).weight()))
                        .ceil();
    }
    return frame.parallelogram(alpha_max, beta_max);
  }

  Point bound = Point::zero(cone.dim());
  for (const Point& h : s.gaps()) {
    for (std::size_t i = 0; i < cone.dim(); ++i) bound[i] = std::max(bound[i], h[i]);
  }
  for (std::size_t i = 0; i < cone.dim(); ++i) bound[i] += mult[i];
  if (max_weight) *max_weight = bound.weight();
  return cone_lower_set(cone, bound);
}

}  // namespace

CSemigroup::CSemigroup(Cone cone, std::vector<Point> gaps)
    : cone_(std::move(cone)), gaps_(std::move(gaps)) {
  for (const Point& h : gaps_) max_gap_weight_ = std::max(max_gap_weight_, h.weight());
}

CSemigroup CSemigroup::make(Cone cone, std::vector<Point> gaps) {
  for (const Point& h : gaps) {
    if (h.dim() != cone.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "gap " + h.to_string() + " has wrong dimension");
    }
    if (h.is_zero()) throw Error(ErrorCode::ZeroGap, "0 cannot be a gap", {coords_of(h)});
    if (!cone.contains(h)) {
      throw Error(ErrorCode::GapOutsideCone, "gap " + h.to_string() + " is outside the cone",
                  {coords_of(h)});
    }
  }
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  CSemigroup s(std::move(cone), std::move(gaps));

  for (const Point& h : s.gaps_) {
    const auto below = cone_lower_set(s.cone_, h);
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
      const Point& a = *it;
      if (a == h || a.is_zero()) continue;
      const Point b = h - a;
      if (!s.is_gap(a) && !s.is_gap(b)) {
        throw Error(ErrorCode::NotClosed,
                    "gap " + h.to_string() + " = " + a.to_string() + " + " + b.to_string() +
                        " with both summands in S",
                    {coords_of(h), coords_of(a), coords_of(b)});
      }
    }
  }
  return s;
}

CSemigroup make_csemigroup(Cone cone, std::vector<Point> gaps) {
  return CSemigroup::make(std::move(cone), std::move(gaps));
}

bool CSemigroup::is_gap(const Point& x) const {
  return std::binary_search(gaps_.begin(), gaps_.end(), x);
}

bool CSemigroup::contains(const Point& x) const {
  require_dim(*this, x);
  return cone_.contains(x) && !is_gap(x);
}

bool induced_leq(const CSemigroup& s, const Point& x, const Point& y) {
  require_same_dim(x, y);
  return s.contains(y - x);
}

std::vector<Point> minimal_generators(const CSemigroup& s) {
  std::vector<Point> out;
  for (const Point& x : generator_candidates(s, nullptr)) {
    if (x.is_zero() || !s.contains(x)) continue;
    bool decomposable = false;
    for (const Point& a : cone_lower_set(s.cone(), x)) {
      if (a.is_zero() || a == x) continue;
      if (s.contains(a) && s.contains(x - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

std::int64_t generator_weight_bound(const CSemigroup& s) {
  std::int64_t w = 0;
  generator_candidates(s, &w);
  return w;
}

std::vector<Point> frobenius_set(const CSemigroup& s, Order order) {
  std::vector<Point> out;
  for (const Point& h : s.gaps()) {
    bool maximal = std::none_of(s.gaps().begin(), s.gaps().end(), [&](const Point& other) {
      if (other == h) return false;
      return order == Order::Cone ? cone_leq(s.cone(), h, other) : induced_leq(s, h, other);
    });
    if (maximal) out.push_back(h);
  }
  return out;
}

std::vector<Point> pseudo_frobenius(const CSemigroup& s) {
  require_gaps(s);
  // a + (S \ {0}) in S follows from a + m in S for each minimal generator m,
  // by induction on the number of generators in a sum.
  const auto gens = minimal_generators(s);
  std::vector<Point> out;
  for (const Point& h : s.gaps()) {
    if (std::all_of(gens.begin(), gens.end(), [&](const Point& m) { return s.contains(h + m); })) {
      out.push_back(h);
    }
  }
  return out;
}

std::vector<Point> apery_set(const CSemigroup& s, const Point& b) {
  require_dim(s, b);
  if (b.is_zero()) throw Error(ErrorCode::ZeroShift, "Apery set of 0 is undefined");
  if (!s.contains(b)) {
    throw Error(ErrorCode::NotAMember, b.to_string() + " is not in the semigroup",
                {coords_of(b)});
  }
  std::vector<Point> out;
  for (const Point& h : s.gaps()) {
    Point a = h + b;
    if (s.contains(a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::int64_t>> separating_weights(const CSemigroup& s,
                                                            const Point& f) {
  require_dim(s, f);
  const std::size_t p = s.dim();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < p; ++i) {
    Row unit(p, 0);
    unit[i] = 1;
    rows.push_back(unit);
  }
  for (const Point& h : s.gaps()) {
    if (h == f) continue;
    rows.push_back((f - h).to_vector());
  }
  return strict_solution(rows, p);
}

std::vector<Point> frobenius_elements(const CSemigroup& s) {
  require_gaps(s);
  std::vector<Point> out;
  for (const Point& f : s.gaps()) {
    if (separating_weights(s, f)) out.push_back(f);
  }
  return out;
}

CofiniteNat weight_set(const CSemigroup& s) {
  const Cone& cone = s.cone();
  // Beyond this level every weight plane meets the cone in a lattice point.
  std::int64_t level_bound = 0;
  if (!cone.is_full()) {
    const std::int64_t w1 = cone.rays()[0].weight();
    const std::int64_t w2 = cone.rays()[1].weight();
    level_bound = ceil_div(checked::mul(w1, w2), cone.det());
  }
  const std::int64_t last = std::max(s.max_gap_weight(), level_bound);
  std::vector<std::int64_t> excluded;
  for (std::int64_t t = 0; t <= last; ++t) {
    bool meets = any_on_level(s.dim(), t, [&](const Point& x) { return s.contains(x); });
    if (!meets) excluded.push_back(t);
  }
  for (const Point& f : frobenius_set(s)) excluded.push_back(f.weight());
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  return {excluded};
}

Rational quasi_elasticity(const CSemigroup& s) {
  require_gaps(s);
  const auto frob = frobenius_set(s);
  std::int64_t lo = frob.front().weight(), hi = lo;
  for (const Point& f : frob) {
    lo = std::min(lo, f.weight());
    hi = std::max(hi, f.weight());
  }
  return Rational(hi, lo);
}

NumericalSemigroup ray_restriction(const CSemigroup& s, std::size_t ray) {
  const auto& rays = s.cone().rays();
  if (ray >= rays.size()) {
    throw Error(ErrorCode::InvalidRay, "ray index " + std::to_string(ray) + " out of range (" +
                                           std::to_string(rays.size()) + " rays)");
  }
  const Point& r = rays[ray];
  std::size_t axis = 0;
  while (r[axis] == 0) ++axis;
  std::vector<std::int64_t> gaps;
  for (const Point& h : s.gaps()) {
    if (h[axis] % r[axis] != 0) continue;
    const std::int64_t k = h[axis] / r[axis];
    if (k * r == h) gaps.push_back(k);
  }
  return NumericalSemigroup::from_gaps(std::move(gaps));
}

}  // namespace conesemi
