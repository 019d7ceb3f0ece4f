#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conesemi/rational.hpp"

namespace conesemi {

using Row = std::vector<std::int64_t>;

/// Decides the homogeneous strict system { a : row . a > 0 for every row }
/// exactly by Fourier-Motzkin elimination. Returns an integer solution
/// when one exists.
std::optional<Row> strict_solution(const std::vector<Row>& rows, std::size_t num_vars);

}  // namespace conesemi
