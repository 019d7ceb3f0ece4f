#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conesemi/cone.hpp"
#include "conesemi/point.hpp"
#include "conesemi/semigroup.hpp"

// Slow reference implementations that work straight from the definitions.
// They share no code path with the certified algorithms they check.
namespace conesemi::oracle {

/// x is an N-combination of `generators`, by a graded sweep over every
/// point of N^p up to weight_cap. Throws CapacityExceeded when
/// weight_cap < weight(x).
bool oracle_member(const std::vector<Point>& generators, const Point& x, std::int64_t weight_cap);

/// Minimal elements of S \ {0} under the induced order, by pairwise scan of
/// all elements with weight <= weight_cap. The cap must reach the candidate
/// region of minimal_generators(), otherwise CapacityExceeded.
std::vector<Point> oracle_minimals(const CSemigroup& s, std::int64_t weight_cap);

/// Weight bound for gaps of any genus-g C-semigroup over `cone`:
/// (2g + 1) * (largest ray weight).
std::int64_t gapset_weight_bound(const Cone& cone, std::size_t genus);

/// All closed gap sets of the given size among the cone points of weight
/// <= weight_cap, each canonically sorted, in lexicographic order. Throws
/// CapacityExceeded if a valid set touches the cap.
std::vector<std::vector<Point>> oracle_all_gapsets(const Cone& cone, std::size_t genus,
                                                   std::int64_t weight_cap);

}  // namespace conesemi::oracle
