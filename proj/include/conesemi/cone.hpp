#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "conesemi/point.hpp"
#include "conesemi/rational.hpp"

namespace conesemi {

/// Integer polyhedral cone inside N^p: either the full orthant N^p
/// (p <= 3) or a two-dimensional cone spanned by two primitive rays.
class Cone {
 public:
  enum class Kind { Full, Rays2D };

  static Cone full(std::size_t p);
  /// Rays must lie in N^2 \ {0} and be linearly independent. They are
  /// divided by their gcd and stored counterclockwise (det(r1, r2) > 0).
  static Cone rays2d(const Point& r1, const Point& r2);

  Kind kind() const noexcept { return kind_; }
  bool is_full() const noexcept { return kind_ == Kind::Full; }
  std::size_t dim() const noexcept { return dim_; }

  /// Extremal rays; the standard basis for full cones.
  const std::vector<Point>& rays() const noexcept { return rays_; }
  /// Inward normals of the supporting hyperplanes.
  std::vector<Point> normals() const;
  /// det(r1, r2) for two-dimensional cones (1 for N^2).
  std::int64_t det() const;

  bool contains(const Point& x) const;

  friend bool operator==(const Cone& a, const Cone& b) = default;

 private:
  Cone() = default;

  Kind kind_ = Kind::Full;
  std::size_t dim_ = 0;
  std::vector<Point> rays_;
};

/// Exact coordinates of a point in the ray basis: x = alpha*r1 + beta*r2.
struct RayCoords {
  Rational alpha;
  Rational beta;
  friend bool operator==(const RayCoords&, const RayCoords&) = default;
};

bool cone_contains(const Cone& c, const Point& x);
RayCoords ray_coords(const Cone& c, const Point& x);
/// x <=_C y, i.e. y - x lies in the cone.
bool cone_leq(const Cone& c, const Point& x, const Point& y);

/// Point-count cap for enumerations; CONESEMI_CAPACITY overrides 10^7.
std::size_t default_capacity();

/// Lattice points of the cone with weight <= max_weight in canonical order.
std::vector<Point> enumerate_cone_points(const Cone& c, std::int64_t max_weight,
                                         std::size_t capacity = default_capacity());

/// Lattice points x of the cone with x <=_C top (the cone-interval [0, top]).
std::vector<Point> cone_lower_set(const Cone& c, const Point& top);

/// Ray basis of a two-dimensional cone with lattice-line parametrisation.
///
/// Lines parallel to ray i are indexed by an integer n: for i = 0 the line
/// is {x : det(r1, x) = n} (so beta = n / det), for i = 1 it is
/// {x : det(x, r2) = n} (alpha = n / det). Because rays are primitive,
/// consecutive lattice points on such a line differ by exactly r_i.
class RayFrame {
 public:
  explicit RayFrame(const Cone& c);

  const Point& ray(std::size_t i) const { return rays_.at(i); }
  std::int64_t det() const noexcept { return det_; }

  RayCoords coords(const Point& x) const;
  /// Coordinate along ray i (alpha for i = 0, beta for i = 1).
  Rational along(std::size_t i, const Point& x) const;
  /// Index n of the line parallel to ray i through x.
  std::int64_t line_index(std::size_t i, const Point& x) const;
  /// Lattice point on line n parallel to ray i whose coordinate along ray i
  /// is the least nonnegative value.
  Point line_start(std::size_t i, std::int64_t n) const;
  /// Lattice points with 0 <= alpha <= alpha_max and 0 <= beta <= beta_max.
  std::vector<Point> parallelogram(const Rational& alpha_max, const Rational& beta_max) const;

 private:
  std::array<Point, 2> rays_;
  std::array<Point, 2> steps_;  // det(r1, steps_[0]) = 1, det(steps_[1], r2) = 1
  std::int64_t det_ = 1;
};

std::int64_t det2(const Point& a, const Point& b);

}  // namespace conesemi
