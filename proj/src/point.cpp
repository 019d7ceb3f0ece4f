#include "conesemi/point.hpp"

#include <algorithm>

#include "conesemi/error.hpp"
#include "conesemi/rational.hpp"

namespace conesemi {

namespace {
void check_dim(std::size_t dim) {
  if (dim < 1 || dim > Point::kMaxDim) {
    throw Error(ErrorCode::UnsupportedDimension,
                "point dimension must be between 1 and 3, got " + std::to_string(dim));
  }
}
}  // namespace

Point::Point(std::initializer_list<std::int64_t> coords)
    : Point(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Point::Point(std::span<const std::int64_t> coords) : dim_(coords.size()) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point Point::zero(std::size_t dim) {
  check_dim(dim);
  Point p;
  p.dim_ = dim;
  return p;
}

Point Point::unit(std::size_t dim, std::size_t axis) {
  Point p = zero(dim);
  p.c_.at(axis) = 1;
  return p;
}

bool Point::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.begin() + dim_, [](std::int64_t v) { return v == 0; });
}

std::int64_t Point::weight() const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < dim_; ++i) w = checked::add(w, c_[i]);
  return w;
}

bool Point::componentwise_leq(const Point& other) const {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c_[i] > other.c_[i]) return false;
  }
  return true;
}

std::string Point::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

Point& Point::operator+=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] = checked::add(c_[i], other.c_[i]);
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] = checked::sub(c_[i], other.c_[i]);
  return *this;
}

Point operator*(std::int64_t k, const Point& p) {
  Point r = p;
  for (std::size_t i = 0; i < p.dim_; ++i) r.c_[i] = checked::mul(k, p.c_[i]);
  return r;
}

bool operator==(const Point& a, const Point& b) noexcept {
  return a.dim_ == b.dim_ && std::equal(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin());
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "dimension mismatch: " + a.to_string() + " vs " +
                                                  b.to_string());
  }
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = p.dim();
  for (std::int64_t v : p.coords()) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace conesemi
