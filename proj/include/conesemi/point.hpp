#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace conesemi {

/// Lattice point of Z^p, 1 <= p <= 3. Ordered canonically: by dimension,
/// then by weight (coordinate sum), then lexicographically.
class Point {
 public:
  static constexpr std::size_t kMaxDim = 3;

  Point() = default;
  Point(std::initializer_list<std::int64_t> coords);
  explicit Point(std::span<const std::int64_t> coords);

  static Point zero(std::size_t dim);
  static Point unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return {c_.data(), dim_}; }
  std::vector<std::int64_t> to_vector() const { return {c_.begin(), c_.begin() + dim_}; }

  bool is_zero() const noexcept;
  std::int64_t weight() const;
  /// Componentwise x <= y (the order of N^p).
  bool componentwise_leq(const Point& other) const;

  std::string to_string() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(std::int64_t k, const Point& p);

  friend bool operator==(const Point& a, const Point& b) noexcept;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  std::array<std::int64_t, kMaxDim> c_{};
  std::size_t dim_ = 0;
};

inline std::int64_t weight(const Point& x) { return x.weight(); }

void require_same_dim(const Point& a, const Point& b);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

}  // namespace conesemi
