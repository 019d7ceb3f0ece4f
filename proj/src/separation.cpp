#include "conesemi/separation.hpp"

#include <algorithm>
#include <numeric>

#include "conesemi/error.hpp"

namespace conesemi {

namespace {

Row normalized(Row r) {
  std::int64_t g = 0;
  for (std::int64_t v : r) g = std::gcd(g, v);
  if (g > 1) {
    for (std::int64_t& v : r) v /= g;
  }
  return r;
}

std::vector<Row> dedup(std::vector<Row> rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace

std::optional<Row> strict_solution(const std::vector<Row>& rows, std::size_t num_vars) {
  // stages[k] holds the system over variables 0..num_vars-1-k (later ones
  // eliminated, their coefficients are zero).
  std::vector<std::vector<Row>> stages;
  std::vector<Row> current;
  for (const Row& r : rows) {
    if (r.size() != num_vars) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    if (is_zero(r)) return std::nullopt;  // 0 > 0
    current.push_back(normalized(r));
  }
  current = dedup(std::move(current));
  stages.push_back(current);

  for (std::size_t k = num_vars; k-- > 0;) {
    std::vector<Row> pos, neg, next;
    for (const Row& r : current) {
      if (r[k] > 0) {
        pos.push_back(r);
      } else if (r[k] < 0) {
        neg.push_back(r);
      } else {
        next.push_back(r);
      }
    }
    for (const Row& p : pos) {
      for (const Row& n : neg) {
        // (-n_k) * p + p_k * n cancels variable k; positive multipliers keep
        // strictness.
        Row combo(num_vars);
        for (std::size_t j = 0; j < num_vars; ++j) {
          combo[j] = checked::add(checked::mul(-n[k], p[j]), checked::mul(p[k], n[j]));
        }
        if (is_zero(combo)) return std::nullopt;
        next.push_back(normalized(std::move(combo)));
      }
    }
    current = dedup(std::move(next));
    stages.push_back(current);
  }
  if (!current.empty()) return std::nullopt;

  // Back substitution: assign variables 0, 1, ... choosing a rational value
  // strictly inside the interval cut out by the stage that still has it.
  std::vector<Rational> value(num_vars, Rational(0));
  for (std::size_t k = 0; k < num_vars; ++k) {
    const std::vector<Row>& stage = stages[num_vars - 1 - k];
    std::optional<Rational> lo, hi;
    for (const Row& r : stage) {
      if (r[k] == 0) continue;
      Rational rest(0);
      for (std::size_t j = 0; j < k; ++j) rest = rest + Rational(r[j]) * value[j];
      // r_k * a_k + rest > 0
      Rational bound = -rest / Rational(r[k]);
      if (r[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      value[k] = (*lo + *hi) / Rational(2);
    } else if (lo) {
      value[k] = Rational(lo->floor() + 1);
    } else if (hi) {
      value[k] = Rational(hi->ceil() - 1);
    }
  }
  std::int64_t lcm = 1;
  for (const Rational& v : value) lcm = std::lcm(lcm, v.den());
  Row out(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) out[j] = (value[j] * Rational(lcm)).num();
  return normalized(out);
}

}  // namespace conesemi
