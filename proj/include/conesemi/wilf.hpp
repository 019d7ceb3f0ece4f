#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conesemi/cone.hpp"
#include "conesemi/semigroup.hpp"

namespace conesemi {

struct WilfReport {
  std::size_t e = 0;  // minimal generators
  std::size_t n = 0;  // elements of S below some gap
  std::size_t c = 0;  // cone points below some gap
  std::size_t p = 0;  // dimension
  std::int64_t margin = 0;  // e*n - p*c
  bool holds = true;

  friend bool operator==(const WilfReport&, const WilfReport&) = default;
};

/// Generalised Wilf quantities. "Below" means a <= b for a gap b, with the
/// cone order by default; Order::Induced uses b - a in S instead.
WilfReport wilf_report(const CSemigroup& s, Order order = Order::Cone);

struct GenusLevel {
  std::size_t genus = 0;
  std::vector<CSemigroup> semigroups;  // sorted by gap list
  std::size_t count() const noexcept { return semigroups.size(); }
};

/// All C-semigroups over `cone` with genus 0..max_genus, generated as a
/// tree: the children of S are S \ {m} for minimal generators m that come
/// after every gap of S in the canonical order. Levels are expanded with up
/// to `jobs` threads; the result does not depend on `jobs`.
std::vector<GenusLevel> enumerate_genus(const Cone& cone, std::size_t max_genus,
                                        unsigned jobs = 1,
                                        std::size_t capacity = default_capacity());

struct WilfCounterexample {
  CSemigroup semigroup;
  WilfReport report;
};

struct WilfSweep {
  std::vector<std::size_t> counts;
  std::vector<std::int64_t> min_margin_by_genus;
  std::int64_t min_margin = 0;
  std::vector<WilfCounterexample> counterexamples;
};

/// Runs wilf_report over every semigroup of genus <= max_genus.
WilfSweep wilf_sweep(const Cone& cone, std::size_t max_genus, Order order = Order::Cone,
                     unsigned jobs = 1, std::size_t capacity = default_capacity());

}  // namespace conesemi
