#include "conesemi/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "conesemi/error.hpp"

namespace conesemi::oracle {

namespace {

// Every point of N^p with weight <= cap, graded.
std::vector<Point> orthant_points(std::size_t dim, std::int64_t cap) {
  std::vector<Point> out;
  for (std::int64_t w = 0; w <= cap; ++w) {
    if (dim == 1) {
      out.push_back(Point{w});
    } else if (dim == 2) {
      for (std::int64_t a = 0; a <= w; ++a) out.push_back(Point{a, w - a});
    } else {
      for (std::int64_t a = 0; a <= w; ++a) {
        for (std::int64_t b = 0; b <= w - a; ++b) out.push_back(Point{a, b, w - a - b});
      }
    }
  }
  return out;
}

}  // namespace

bool oracle_member(const std::vector<Point>& generators, const Point& x, std::int64_t weight_cap) {
  if (x.weight() > weight_cap) {
    throw Error(ErrorCode::CapacityExceeded, "weight cap below the queried point");
  }
  std::unordered_set<Point, PointHash> members;
  for (const Point& y : orthant_points(x.dim(), weight_cap)) {
    bool in = y.is_zero();
    for (const Point& g : generators) {
      if (in) break;
      in = members.count(y - g) > 0;
    }
    if (in) members.insert(y);
    if (y == x) return in;
  }
  return false;
}

std::vector<Point> oracle_minimals(const CSemigroup& s, std::int64_t weight_cap) {
  if (weight_cap < generator_weight_bound(s)) {
    throw Error(ErrorCode::CapacityExceeded,
                "weight cap " + std::to_string(weight_cap) +
                    " does not reach the generator region; minimals may be missed");
  }
  std::vector<Point> elements;
  for (const Point& y : orthant_points(s.dim(), weight_cap)) {
    if (!y.is_zero() && s.contains(y)) elements.push_back(y);
  }
  std::vector<Point> out;
  for (const Point& x : elements) {
    bool minimal = true;
    for (const Point& y : elements) {
      if (y.weight() >= x.weight()) break;
      if (s.contains(x - y)) {  // y <=_S x
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::int64_t gapset_weight_bound(const Cone& cone, std::size_t genus) {
  // For a gap h, every a in [0, h]_C pairs with h - a and at least one of
  // the two is a gap, so the interval has at most 2g points. It contains
  // i*r1 (i <= floor(alpha)) and h - j*r2 (j <= floor(beta)), at least
  // floor(alpha) + floor(beta) + 1 points (w(h) + 1 for full cones), hence
  // alpha + beta < 2g + 1 and w(h) < (2g + 1) * max ray weight.
  std::int64_t max_ray = 0;
  for (const Point& r : cone.rays()) max_ray = std::max(max_ray, r.weight());
  return static_cast<std::int64_t>(2 * genus + 1) * max_ray;
}

std::vector<std::vector<Point>> oracle_all_gapsets(const Cone& cone, std::size_t genus,
                                                   std::int64_t weight_cap) {
  std::vector<Point> pool;
  for (const Point& y : orthant_points(cone.dim(), weight_cap)) {
    if (!y.is_zero() && cone.contains(y)) pool.push_back(y);
  }
  std::vector<std::vector<Point>> out;
  if (genus > pool.size()) return out;

  auto closed = [&](const std::set<Point>& gaps) {
    for (const Point& h : gaps) {
      for (const Point& a : pool) {
        if (a.weight() >= h.weight()) break;
        const Point b = h - a;
        if (b.is_zero() || !cone.contains(b)) continue;
        if (!gaps.count(a) && !gaps.count(b)) return false;
      }
    }
    return true;
  };

  std::vector<std::size_t> idx(genus);
  for (std::size_t i = 0; i < genus; ++i) idx[i] = i;
  while (true) {
    std::set<Point> gaps;
    for (std::size_t i : idx) gaps.insert(pool[i]);
    if (closed(gaps)) {
      for (const Point& h : gaps) {
        if (h.weight() == weight_cap && weight_cap > 0) {
          throw Error(ErrorCode::CapacityExceeded,
                      "a valid gap set touches the weight cap " + std::to_string(weight_cap));
        }
      }
      out.emplace_back(gaps.begin(), gaps.end());
    }
    // Next combination.
    std::size_t i = genus;
    while (i > 0 && idx[i - 1] == pool.size() - genus + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < genus; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace conesemi::oracle
