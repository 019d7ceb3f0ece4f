#include "conesemi/numerical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "conesemi/error.hpp"

namespace conesemi {

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<std::int64_t> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  NumericalSemigroup s;
  s.gaps_ = std::move(gaps);
  for (std::int64_t h : s.gaps_) {
    if (h <= 0) throw Error(ErrorCode::ZeroGap, "numerical semigroup gaps must be positive");
  }
  for (std::int64_t h : s.gaps_) {
    for (std::int64_t a = 1; a <= h / 2; ++a) {
      if (s.contains(a) && s.contains(h - a)) {
        throw Error(ErrorCode::NotClosed,
                    "gap " + std::to_string(h) + " = " + std::to_string(a) + " + " +
                        std::to_string(h - a) + " with both summands in the semigroup",
                    {{h}, {a}, {h - a}});
      }
    }
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> generators) {
  std::int64_t g = 0;
  for (std::int64_t a : generators) {
    if (a <= 0) throw Error(ErrorCode::InvalidGenerators, "generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw Error(ErrorCode::NotCofinite,
                "generators have gcd " + std::to_string(g) + ", complement is infinite");
  }
  const std::int64_t smallest = *std::min_element(generators.begin(), generators.end());
  // Membership sieve; once `smallest` consecutive members appear, all larger
  // integers are members.
  std::vector<char> in{1};
  std::int64_t run = 0;
  std::vector<std::int64_t> gaps;
  for (std::int64_t n = 1; run < smallest; ++n) {
    bool member = false;
    for (std::int64_t a : generators) {
      if (a <= n && in[static_cast<std::size_t>(n - a)]) {
        member = true;
        break;
      }
    }
    in.push_back(member ? 1 : 0);
    if (member) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(n);
    }
  }
  NumericalSemigroup s;
  s.gaps_ = std::move(gaps);
  return s;
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

std::int64_t NumericalSemigroup::multiplicity() const {
  std::int64_t m = 1;
  while (!contains(m)) ++m;
  return m;
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generators() const {
  // Minimal generators lie in [m, F + m].
  const std::int64_t m = multiplicity();
  std::vector<std::int64_t> out;
  const std::int64_t upper = std::max(frobenius() + m, m);
  for (std::int64_t x = m; x <= upper; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (std::int64_t a = m; a <= x - m && !decomposable; ++a) {
      decomposable = contains(a) && contains(x - a);
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::pseudo_frobenius() const {
  const auto gens = minimal_generators();
  std::vector<std::int64_t> out;
  for (std::int64_t h : gaps_) {
    if (std::all_of(gens.begin(), gens.end(), [&](std::int64_t a) { return contains(h + a); })) {
      out.push_back(h);
    }
  }
  return out;
}

std::size_t NumericalSemigroup::left_elements() const {
  return static_cast<std::size_t>(conductor()) - gaps_.size();
}

bool CofiniteNat::contains(std::int64_t n) const {
  return n >= 0 && !std::binary_search(excluded.begin(), excluded.end(), n);
}

}  // namespace conesemi
