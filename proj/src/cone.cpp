#include "conesemi/cone.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "conesemi/error.hpp"

namespace conesemi {

std::int64_t det2(const Point& a, const Point& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "determinant needs two-dimensional points");
  }
  return checked::sub(checked::mul(a[0], b[1]), checked::mul(a[1], b[0]));
}

namespace {

Point primitive(const Point& r) {
  std::int64_t g = std::gcd(r[0], r[1]);
  return Point{r[0] / g, r[1] / g};
}

// Solves a*s + b*t = gcd(a, b) for nonnegative a, b.
void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  s = old_s;
  t = old_t;
}

void require_dim(const Cone& c, const Point& x) {
  if (x.dim() != c.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point " + x.to_string() + " has dimension " +
                                                  std::to_string(x.dim()) + ", cone has " +
                                                  std::to_string(c.dim()));
  }
}

}  // namespace

Cone Cone::full(std::size_t p) {
  if (p < 1 || p > Point::kMaxDim) {
    throw Error(ErrorCode::UnsupportedDimension, "full cone dimension must be 1..3");
  }
  Cone c;
  c.kind_ = Kind::Full;
  c.dim_ = p;
  for (std::size_t i = 0; i < p; ++i) c.rays_.push_back(Point::unit(p, i));
  return c;
}

Cone Cone::rays2d(const Point& r1, const Point& r2) {
  for (const Point* r : {&r1, &r2}) {
    if (r->dim() != 2) throw Error(ErrorCode::InvalidCone, "rays must be two-dimensional");
    if ((*r)[0] < 0 || (*r)[1] < 0) {
      throw Error(ErrorCode::InvalidCone, "ray " + r->to_string() + " leaves N^2");
    }
    if (r->is_zero()) throw Error(ErrorCode::InvalidCone, "zero ray");
  }
  Point a = primitive(r1);
  Point b = primitive(r2);
  std::int64_t d = det2(a, b);
  if (d == 0) throw Error(ErrorCode::InvalidCone, "rays are linearly dependent");
  if (d < 0) std::swap(a, b);
  Cone c;
  c.kind_ = Kind::Rays2D;
  c.dim_ = 2;
  c.rays_ = {a, b};
  return c;
}

std::vector<Point> Cone::normals() const {
  if (is_full()) return rays_;
  const Point& a = rays_[0];
  const Point& b = rays_[1];
  return {Point{-a[1], a[0]}, Point{b[1], -b[0]}};
}

std::int64_t Cone::det() const {
  if (dim_ != 2) throw Error(ErrorCode::DimensionMismatch, "det is defined for 2D cones only");
  return det2(rays_[0], rays_[1]);
}

bool Cone::contains(const Point& x) const {
  require_dim(*this, x);
  if (is_full()) {
    for (std::int64_t v : x.coords()) {
      if (v < 0) return false;
    }
    return true;
  }
  return det2(x, rays_[1]) >= 0 && det2(rays_[0], x) >= 0;
}

bool cone_contains(const Cone& c, const Point& x) { return c.contains(x); }

RayCoords ray_coords(const Cone& c, const Point& x) {
  require_dim(c, x);
  return RayFrame(c).coords(x);
}

bool cone_leq(const Cone& c, const Point& x, const Point& y) {
  require_same_dim(x, y);
  return c.contains(y - x);
}

std::size_t default_capacity() {
  if (const char* env = std::getenv("CONESEMI_CAPACITY")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

std::vector<Point> enumerate_cone_points(const Cone& c, std::int64_t max_weight,
                                         std::size_t capacity) {
  std::vector<Point> out;
  auto emit = [&](const Point& x) {
    if (!c.contains(x)) return;
    if (out.size() >= capacity) {
      throw Error(ErrorCode::CapacityExceeded,
                  "cone point enumeration exceeds capacity " + std::to_string(capacity));
    }
    out.push_back(x);
  };
  for (std::int64_t w = 0; w <= max_weight; ++w) {
    switch (c.dim()) {
      case 1:
        emit(Point{w});
        break;
      case 2:
        for (std::int64_t a = 0; a <= w; ++a) emit(Point{a, w - a});
        break;
      default:
        for (std::int64_t a = 0; a <= w; ++a) {
          for (std::int64_t b = 0; b <= w - a; ++b) emit(Point{a, b, w - a - b});
        }
        break;
    }
  }
  return out;
}

std::vector<Point> cone_lower_set(const Cone& c, const Point& top) {
  require_dim(c, top);
  std::vector<Point> out;
  if (!c.contains(top)) return out;
  // top - x in the cone forces 0 <= x <= top componentwise.
  Point x = Point::zero(c.dim());
  const std::size_t p = c.dim();
  while (true) {
    if (c.contains(x) && c.contains(top - x)) out.push_back(x);
    std::size_t i = 0;
    while (i < p && x[i] == top[i]) {
      x[i] = 0;
      ++i;
    }
    if (i == p) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

RayFrame::RayFrame(const Cone& c) {
  if (c.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension, "ray frame needs a two-dimensional cone");
  }
  rays_ = {c.rays()[0], c.rays()[1]};
  det_ = det2(rays_[0], rays_[1]);
  std::int64_t s = 0, t = 0;
  ext_gcd(rays_[0][0], rays_[0][1], s, t);
  steps_[0] = Point{-t, s};
  ext_gcd(rays_[1][1], rays_[1][0], s, t);
  steps_[1] = Point{s, -t};
}

RayCoords RayFrame::coords(const Point& x) const {
  return {Rational(det2(x, rays_[1]), det_), Rational(det2(rays_[0], x), det_)};
}

Rational RayFrame::along(std::size_t i, const Point& x) const {
  return i == 0 ? Rational(det2(x, rays_[1]), det_) : Rational(det2(rays_[0], x), det_);
}

std::int64_t RayFrame::line_index(std::size_t i, const Point& x) const {
  return i == 0 ? det2(rays_[0], x) : det2(x, rays_[1]);
}

Point RayFrame::line_start(std::size_t i, std::int64_t n) const {
  Point base = n * steps_.at(i);
  // along(base) = n * det(step, other ray) / det; shift by whole rays to [0, 1).
  std::int64_t num = i == 0 ? det2(base, rays_[1]) : det2(rays_[0], base);
  std::int64_t k = ceil_div(-num, det_);
  return base + k * rays_[i];
}

std::vector<Point> RayFrame::parallelogram(const Rational& alpha_max,
                                           const Rational& beta_max) const {
  std::vector<Point> out;
  if (alpha_max < Rational(0) || beta_max < Rational(0)) return out;
  const std::int64_t n_max = (beta_max * Rational(det_)).floor();
  for (std::int64_t n = 0; n <= n_max; ++n) {
    for (Point x = line_start(0, n); along(0, x) <= alpha_max; x += rays_[0]) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace conesemi
