#include "conesemi/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "conesemi/error.hpp"

namespace conesemi {

namespace {

constexpr double kUnit = 40.0;
constexpr double kPad = 20.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Canvas {
  std::int64_t width_units;
  std::int64_t height_units;

  double x(double u) const { return kPad + u * kUnit; }
  double y(double v) const { return kPad + (static_cast<double>(height_units) - v) * kUnit; }
  double pixel_width() const { return 2 * kPad + static_cast<double>(width_units) * kUnit; }
  double pixel_height() const { return 2 * kPad + static_cast<double>(height_units) * kUnit; }
};

// Where the ray r leaves the viewport [0, W] x [0, H].
std::pair<double, double> ray_exit(const Point& r, double w, double h) {
  double t = 1e300;
  if (r[0] > 0) t = std::min(t, w / static_cast<double>(r[0]));
  if (r[1] > 0) t = std::min(t, h / static_cast<double>(r[1]));
  return {t * static_cast<double>(r[0]), t * static_cast<double>(r[1])};
}

}  // namespace

std::string render_svg(const CSemigroup& s, const RenderSpec& spec) {
  if (s.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension, "plots need a two-dimensional semigroup");
  }
  std::int64_t max_x = 0, max_y = 0;
  for (const Point& h : s.gaps()) {
    max_x = std::max(max_x, h[0]);
    max_y = std::max(max_y, h[1]);
  }
  Canvas cv{max_x + spec.margin, max_y + spec.margin};
  const double w = static_cast<double>(cv.width_units);
  const double h = static_cast<double>(cv.height_units);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(cv.pixel_width())
      << "\" height=\"" << num(cv.pixel_height()) << "\" viewBox=\"0 0 " << num(cv.pixel_width())
      << ' ' << num(cv.pixel_height()) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(cv.pixel_width()) << "\" height=\""
      << num(cv.pixel_height()) << "\" fill=\"white\"/>\n";

  if (spec.cone_region) {
    const auto a = ray_exit(s.cone().rays()[0], w, h);
    const auto b = ray_exit(s.cone().rays()[1], w, h);
    std::vector<std::pair<double, double>> poly{{0, 0}, a};
    // The top-right corner lies between the rays when they leave through
    // different edges.
    const Point& r1 = s.cone().rays()[0];
    const Point& r2 = s.cone().rays()[1];
    const bool r1_right = r1[1] * cv.width_units <= r1[0] * cv.height_units;
    const bool r2_top = r2[0] * cv.height_units <= r2[1] * cv.width_units;
    if (r1_right && r2_top) poly.emplace_back(w, h);
    poly.push_back(b);
    out << "<polygon class=\"cone\" fill=\"#dde8f5\" stroke=\"#4a6fa5\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) out << ' ';
      out << num(cv.x(poly[i].first)) << ',' << num(cv.y(poly[i].second));
    }
    out << "\"/>\n";
  }

  if (spec.level_lines) {
    for (std::int64_t t = 1; t <= cv.width_units + cv.height_units; ++t) {
      const double td = static_cast<double>(t);
      const double x0 = std::max(0.0, td - h), x1 = std::min(w, td);
      out << "<line class=\"level\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\" x1=\""
          << num(cv.x(x0)) << "\" y1=\"" << num(cv.y(td - x0)) << "\" x2=\"" << num(cv.x(x1))
          << "\" y2=\"" << num(cv.y(td - x1)) << "\"/>\n";
    }
  }

  for (std::int64_t px = 0; px <= cv.width_units; ++px) {
    for (std::int64_t py = 0; py <= cv.height_units; ++py) {
      const Point p{px, py};
      if (!s.cone().contains(p)) continue;
      const double cx = cv.x(static_cast<double>(px));
      const double cy = cv.y(static_cast<double>(py));
      if (s.is_gap(p)) {
        if (!spec.gaps) continue;
        out << "<path class=\"gap\" stroke=\"#c0392b\" stroke-width=\"2\" d=\"M" << num(cx - 5)
            << ' ' << num(cy - 5) << " L" << num(cx + 5) << ' ' << num(cy + 5) << " M"
            << num(cx - 5) << ' ' << num(cy + 5) << " L" << num(cx + 5) << ' ' << num(cy - 5)
            << "\"/>\n";
      } else if (spec.members) {
        out << "<circle class=\"member\" cx=\"" << num(cx) << "\" cy=\"" << num(cy)
            << "\" r=\"4\" fill=\"#222222\"/>\n";
      }
    }
  }

  auto ring = [&](const Point& p, const char* cls, double r, const char* color) {
    out << "<circle class=\"" << cls << "\" cx=\"" << num(cv.x(static_cast<double>(p[0])))
        << "\" cy=\"" << num(cv.y(static_cast<double>(p[1]))) << "\" r=\"" << num(r)
        << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  };
  if (spec.frobenius) {
    for (const Point& f : frobenius_set(s, spec.order)) ring(f, "frobenius", 10, "#c0392b");
  }
  if (spec.pseudo_frobenius && s.genus() > 0) {
    for (const Point& f : pseudo_frobenius(s)) ring(f, "pseudo-frobenius", 14, "#8e44ad");
  }
  if (spec.generators) {
    for (const Point& m : minimal_generators(s)) {
      if (m[0] <= cv.width_units && m[1] <= cv.height_units) ring(m, "generator", 8, "#27ae60");
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace conesemi
