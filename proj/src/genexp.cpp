#include "conesemi/genexp.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "conesemi/numerical.hpp"

namespace conesemi {

namespace {

// Membership in <generators> on the rectangle [0, width) x [0, height) of
// N^2, grown on demand. Row-major filling is valid because subtracting a
// nonzero generator with nonnegative coordinates moves to an earlier cell.
class GridMembership {
 public:
  GridMembership(const Cone& cone, const std::vector<Point>& generators)
      : cone_(cone), gens_(generators) {}

  bool operator()(const Point& x) {
    if (!cone_.contains(x)) return false;
    if (x[0] >= width_ || x[1] >= height_) grow(x);
    return cells_[index(x[0], x[1])] != 0;
  }

 private:
  std::size_t index(std::int64_t a, std::int64_t b) const {
    return static_cast<std::size_t>(a * height_ + b);
  }

  void grow(const Point& x) {
    width_ = std::max(x[0] + 1, 2 * width_);
    height_ = std::max(x[1] + 1, 2 * height_);
    cells_.assign(static_cast<std::size_t>(width_ * height_), 0);
    for (std::int64_t a = 0; a < width_; ++a) {
      for (std::int64_t b = 0; b < height_; ++b) {
        const Point p{a, b};
        if (!cone_.contains(p)) continue;
        bool in = p.is_zero();
        for (const Point& g : gens_) {
          if (in) break;
          if (g[0] <= a && g[1] <= b) in = cells_[index(a - g[0], b - g[1])] != 0;
        }
        cells_[index(a, b)] = in ? 1 : 0;
      }
    }
  }

  const Cone& cone_;
  const std::vector<Point>& gens_;
  std::int64_t width_ = 0;
  std::int64_t height_ = 0;
  std::vector<char> cells_;
};

Error::Coords coords_of(const Point& p) { return p.to_vector(); }

CSemigroup expand_numerical(const GeneratorInput& input) {
  std::vector<std::int64_t> values;
  for (const Point& g : input.generators) values.push_back(g[0]);
  NumericalSemigroup n;
  try {
    n = NumericalSemigroup::from_generators(values);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotCofinite, e.what(), {{1}});
  }
  std::vector<Point> gaps;
  for (std::int64_t h : n.gaps()) gaps.push_back(Point{h});
  return make_csemigroup(input.cone, std::move(gaps));
}

}  // namespace

GeneratorInput GeneratorInput::make(Cone cone, std::vector<Point> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidGenerators, "generator list is empty");
  for (const Point& g : generators) {
    if (g.dim() != cone.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "generator " + g.to_string() +
                                                    " does not match the cone dimension");
    }
    if (g.is_zero()) throw Error(ErrorCode::ZeroPoint, "generators must be nonzero");
    if (!cone.contains(g)) {
      throw Error(ErrorCode::PointOutsideCone, "generator " + g.to_string() + " is outside the cone",
                  {coords_of(g)});
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return GeneratorInput{std::move(cone), std::move(generators)};
}

CSemigroup expand(const GeneratorInput& input, const ExpandLimits& limits) {
  const Cone& cone = input.cone;
  if (cone.dim() == 1) return expand_numerical(input);
  if (cone.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension, "generator expansion supports p <= 2 only");
  }
  const RayFrame frame(cone);
  const std::int64_t det = frame.det();

  // Each extremal ray is a face: its elements are sums of generators lying
  // on it, so the ray semigroup is generated by those alone.
  for (std::size_t i = 0; i < 2; ++i) {
    const bool covered = std::any_of(input.generators.begin(), input.generators.end(),
                                     [&](const Point& g) { return frame.line_index(i, g) == 0; });
    if (!covered) {
      throw Error(ErrorCode::ConeMismatch,
                  "no generator on extremal ray " + frame.ray(i).to_string() +
                      "; the generators span a smaller cone",
                  {coords_of(frame.ray(i))});
    }
  }
  std::int64_t bound[2];
  for (std::size_t i = 0; i < 2; ++i) {
    const Point& ray = frame.ray(i);
    std::vector<std::int64_t> on_ray;
    bool near_line = false;
    for (const Point& g : input.generators) {
      const std::int64_t n = frame.line_index(i, g);
      if (n == 0) on_ray.push_back(frame.along(i, g).num());
      if (n == 1) near_line = true;
    }
    NumericalSemigroup restricted;
    try {
      restricted = NumericalSemigroup::from_generators(on_ray);
    } catch (const Error&) {
      throw Error(ErrorCode::NotCofinite,
                  "generators on ray " + ray.to_string() +
                      " have gcd > 1, infinitely many gaps on the ray",
                  {coords_of(ray)});
    }
    // Elements on the first lattice line parallel to the ray need a
    // generator on that line; otherwise the whole line is missed.
    if (!near_line) {
      throw Error(ErrorCode::NotCofinite,
                  "no generator at lattice distance 1 from ray " + ray.to_string() +
                      ", infinitely many gaps parallel to it",
                  {coords_of(ray)});
    }
    bound[i] = std::max<std::int64_t>(restricted.conductor(), 1);
  }

  GridMembership member(cone, input.generators);

  // Deep region: with k_i >= ray conductor, every point with alpha >= k_1
  // and beta >= k_2 is z + a*(k_1 r_1) + b*(k_2 r_2) for z in the box
  // [k_1, 2k_1) x [k_2, 2k_2), so checking the box certifies the region.
  while (true) {
    bool box_ok = true;
    for (std::int64_t n = bound[1] * det; n < 2 * bound[1] * det && box_ok; ++n) {
      const Point start = frame.line_start(0, n);
      for (std::int64_t t = bound[0]; t < 2 * bound[0]; ++t) {
        if (!member(start + t * frame.ray(0))) {
          box_ok = false;
          break;
        }
      }
    }
    if (box_ok) break;
    bound[0] *= 2;
    bound[1] *= 2;
    if (bound[0] > limits.bound_cap || bound[1] > limits.bound_cap) {
      throw Error(ErrorCode::BudgetExceeded, "deep-region certificate exceeded the bound cap");
    }
  }

  // Boundary strips: lines parallel to ray i closer than k_j to it. Once a
  // line has a member at step t0, every step t >= t0 + k_i is a member.
  std::set<Point> gaps;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    const Point& step = frame.ray(i);
    for (std::int64_t n = 0; n < bound[j] * det; ++n) {
      Point x = frame.line_start(i, n);
      std::int64_t t = 0;
      while (!member(x)) {
        gaps.insert(x);
        x += step;
        if (++t > limits.line_cap) {
          throw Error(ErrorCode::BudgetExceeded,
                      "no member found within " + std::to_string(limits.line_cap) +
                          " steps on a line parallel to " + step.to_string());
        }
      }
      for (std::int64_t k = 0; k < bound[i]; ++k, x += step) {
        if (!member(x)) gaps.insert(x);
      }
    }
  }
  return make_csemigroup(cone, std::vector<Point>(gaps.begin(), gaps.end()));
}

CofinitenessReport is_csemigroup(const GeneratorInput& input, const ExpandLimits& limits) {
  CofinitenessReport report;
  try {
    report.genus = expand(input, limits).genus();
    report.is_csemigroup = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCofinite && e.code() != ErrorCode::ConeMismatch) throw;
    report.failure = std::string(e.name());
    report.detail = e.what();
    if (!e.witness().empty()) report.ray = Point(e.witness().front());
  }
  return report;
}

}  // namespace conesemi
