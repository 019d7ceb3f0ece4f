#include "doctest.h"

#include <random>

#include "conesemi/error.hpp"
#include "conesemi/genexp.hpp"
#include "conesemi/oracle.hpp"
#include "conesemi/wilf.hpp"
#include "test_helpers.hpp"

using namespace conesemi;
using namespace conesemi::testing;

TEST_CASE("expand known generating sets") {
  const auto sa_gens = pts({{1, 0}, {2, 1}, {3, 2}, {3, 3}, {4, 4}, {5, 5}});
  CHECK(expand(GeneratorInput::make(diag_cone(), sa_gens)) == s_a());
  CHECK(expand(GeneratorInput::make(diag_cone(), {Point{1, 0}, Point{1, 1}})).genus() == 0);
  CHECK(expand(GeneratorInput::make(Cone::full(1), {Point{3}, Point{5}})).gaps().size() == 4);

  const auto report = is_csemigroup(GeneratorInput::make(diag_cone(), sa_gens));
  CHECK(report.is_csemigroup);
  CHECK(report.genus == 2);
}

TEST_CASE("generator input validation") {
  CHECK_THROWS_AS(GeneratorInput::make(diag_cone(), {}), Error);
  CHECK_THROWS_AS(GeneratorInput::make(diag_cone(), {Point{0, 0}}), Error);
  CHECK_THROWS_AS(GeneratorInput::make(diag_cone(), {Point{0, 1}}), Error);
  const auto g = GeneratorInput::make(diag_cone(), {Point{1, 1}, Point{1, 0}, Point{1, 1}});
  CHECK(g.generators == pts({{1, 0}, {1, 1}}));
}

TEST_CASE("expand failures") {
  try {
    expand(GeneratorInput::make(diag_cone(), {Point{2, 0}, Point{1, 1}}));
    FAIL("expected NotCofinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCofinite);
    REQUIRE(e.witness().size() == 1);
    CHECK(e.witness()[0] == std::vector<std::int64_t>{1, 0});
  }
  try {
    expand(GeneratorInput::make(diag_cone(), {Point{1, 0}}));
    FAIL("expected ConeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConeMismatch);
  }
  const auto mismatch = is_csemigroup(GeneratorInput::make(diag_cone(), {Point{1, 0}}));
  CHECK_FALSE(mismatch.is_csemigroup);
  CHECK(mismatch.failure == "ConeMismatch");
  REQUIRE(mismatch.ray.has_value());
  CHECK(*mismatch.ray == Point{1, 1});

  CHECK_THROWS_AS(expand(GeneratorInput::make(Cone::full(3), {Point{1, 0, 0}})), Error);
  CHECK_THROWS_AS(expand(GeneratorInput::make(Cone::full(1), {Point{4}, Point{6}})), Error);
}

TEST_CASE("cofinite rays are not enough") {
  // Both rays are cofinite, yet every point (k+1, k) has lattice distance 1
  // from the diagonal ray and no generator sits at that distance.
  const auto input = GeneratorInput::make(diag_cone(), {Point{3, 0}, Point{5, 0}, Point{1, 1}});
  const auto report = is_csemigroup(input);
  CHECK_FALSE(report.is_csemigroup);
  CHECK(report.failure == "NotCofinite");
  REQUIRE(report.ray.has_value());
  CHECK(*report.ray == Point{1, 1});
  for (std::int64_t k = 0; k < 12; ++k) {
    CHECK_FALSE(oracle::oracle_member(input.generators, Point{k + 1, k}, 2 * k + 1));
  }

  // Adding a generator at distance 1 restores cofiniteness.
  const auto fixed = GeneratorInput::make(
      diag_cone(), {Point{3, 0}, Point{5, 0}, Point{1, 1}, Point{2, 1}});
  CHECK(is_csemigroup(fixed).is_csemigroup);
}

TEST_CASE("membership agrees with the knapsack oracle") {
  const std::vector<std::vector<Point>> inputs = {
      pts({{1, 0}, {2, 1}, {3, 2}, {3, 3}, {4, 4}, {5, 5}}),
      pts({{3, 0}, {5, 0}, {1, 1}, {2, 1}}),
      pts({{2, 0}, {3, 0}, {1, 1}, {2, 1}}),
      pts({{4, 0}, {5, 0}, {7, 0}, {2, 2}, {3, 3}, {2, 1}, {5, 2}}),
  };
  for (const auto& gens : inputs) {
    const auto s = expand(GeneratorInput::make(diag_cone(), gens));
    for (const Point& x : enumerate_cone_points(diag_cone(), 20, 100'000)) {
      CHECK(s.contains(x) == oracle::oracle_member(gens, x, 20));
    }
  }
  const auto full_gens = pts({{2, 0}, {3, 0}, {0, 2}, {0, 3}, {1, 1}});
  const auto s = expand(GeneratorInput::make(Cone::full(2), full_gens));
  for (const Point& x : enumerate_cone_points(Cone::full(2), 20, 100'000)) {
    CHECK(s.contains(x) == oracle::oracle_member(full_gens, x, 20));
  }
}

TEST_CASE("deep points are members") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(0, 60);
  const auto gens = pts({{4, 0}, {5, 0}, {7, 0}, {2, 2}, {3, 3}, {2, 1}, {5, 2}});
  const auto s = expand(GeneratorInput::make(diag_cone(), gens));
  const std::int64_t beyond = s.max_gap_weight();
  int checked = 0;
  while (checked < 500) {
    const Point x{coord(rng), coord(rng)};
    if (!cone_contains(diag_cone(), x) || x.weight() <= beyond) continue;
    CHECK(oracle::oracle_member(gens, x, x.weight()));
    ++checked;
  }
}

TEST_CASE("round trip over the wide cone") {
  for (const auto& level : enumerate_genus(wide_cone(), 3)) {
    for (const CSemigroup& s : level.semigroups) {
      CHECK(expand(GeneratorInput::make(wide_cone(), minimal_generators(s))) == s);
    }
  }
}
