#include "doctest.h"

#include "conesemi/error.hpp"
#include "conesemi/oracle.hpp"
#include "conesemi/semigroup.hpp"
#include "test_helpers.hpp"

using namespace conesemi;
using namespace conesemi::testing;
using namespace conesemi::oracle;

TEST_CASE("knapsack membership") {
  CHECK(oracle_member({Point{1, 0}, Point{1, 1}}, Point{5, 3}, 8));
  const auto msg_a = pts({{1, 0}, {2, 1}, {3, 2}, {3, 3}, {4, 4}, {5, 5}});
  CHECK_FALSE(oracle_member(msg_a, Point{2, 2}, 4));
  CHECK(oracle_member(msg_a, Point{3, 3}, 6));
  CHECK_FALSE(oracle_member({Point{3, 0}, Point{5, 0}}, Point{7, 0}, 7));
  CHECK(oracle_member({Point{3, 0}, Point{5, 0}}, Point{8, 0}, 8));
  CHECK(oracle_member({Point{3}, Point{5}}, Point{0}, 0));
  CHECK_THROWS_AS(oracle_member({Point{1, 0}}, Point{5, 3}, 7), Error);
}

TEST_CASE("brute-force minimals") {
  CHECK(oracle_minimals(s_a(), 14) == pts({{1, 0}, {2, 1}, {3, 2}, {3, 3}, {4, 4}, {5, 5}}));
  CHECK(oracle_minimals(make_csemigroup(Cone::full(2), {}), 4) == pts({{1, 0}, {0, 1}}));
  CHECK(oracle_minimals(make_csemigroup(wide_cone(), {}), 10) ==
        pts({{2, 1}, {1, 1}, {1, 2}, {1, 3}}));
  CHECK_THROWS_AS(oracle_minimals(s_a(), 3), Error);
}

TEST_CASE("exhaustive gap sets") {
  CHECK(oracle_all_gapsets(Cone::full(2), 0, 4) == std::vector<std::vector<Point>>{{}});
  CHECK(oracle_all_gapsets(Cone::full(2), 1, gapset_weight_bound(Cone::full(2), 1)) ==
        std::vector<std::vector<Point>>{{Point{0, 1}}, {Point{1, 0}}});
  CHECK(oracle_all_gapsets(Cone::full(2), 2, gapset_weight_bound(Cone::full(2), 2)).size() == 7);
  // A cap that cuts through valid gap sets is reported, not silently used.
  CHECK_THROWS_AS(oracle_all_gapsets(Cone::full(2), 2, 2), Error);
  CHECK(gapset_weight_bound(wide_cone(), 2) == 20);
}
