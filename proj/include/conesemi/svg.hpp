#pragma once

#include <cstdint>
#include <string>

#include "conesemi/semigroup.hpp"

namespace conesemi {

/// Layers and viewport of a semigroup plot. The viewport spans [0, X] x
/// [0, Y] where X, Y exceed every gap coordinate by `margin`.
struct RenderSpec {
  std::int64_t margin = 3;
  bool members = true;
  bool gaps = true;
  bool frobenius = true;
  bool pseudo_frobenius = false;
  bool generators = false;
  bool level_lines = false;
  bool cone_region = true;
  Order order = Order::Cone;
};

/// Deterministic SVG scatter plot of a two-dimensional semigroup: shaded
/// cone, members as dots, gaps as crosses, Frobenius set circled. Throws
/// UnsupportedDimension when p != 2.
std::string render_svg(const CSemigroup& s, const RenderSpec& spec = {});

}  // namespace conesemi
