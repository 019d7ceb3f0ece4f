#include "conesemi/json_io.hpp"

#include <algorithm>

namespace conesemi::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::int64_t integer(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

}  // namespace

Json to_json(const Point& p) { return Json(p.to_vector()); }

Json to_json(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const Point& p : sorted) out.push_back(to_json(p));
  return out;
}

Json to_json(const Cone& c) {
  if (c.is_full()) return Json{{"type", "full"}, {"p", c.dim()}};
  return Json{{"type", "rays2d"}, {"rays", Json::array({to_json(c.rays()[0]), to_json(c.rays()[1])})}};
}

Json to_json(const CSemigroup& s) { return Json{{"cone", to_json(s.cone())}, {"gaps", to_json(s.gaps())}}; }

Json to_json(const NumericalSemigroup& n) {
  return Json{{"gaps", n.gaps()},
              {"frobenius", n.frobenius()},
              {"conductor", n.conductor()},
              {"multiplicity", n.multiplicity()},
              {"minimal_generators", n.minimal_generators()}};
}

Json to_json(const WilfReport& r) {
  return Json{{"e", r.e}, {"n", r.n}, {"c", r.c}, {"p", r.p}, {"margin", r.margin}, {"holds", r.holds}};
}

Json to_json(const WilfSweep& sweep) {
  Json counter = Json::array();
  for (const auto& ce : sweep.counterexamples) {
    counter.push_back(Json{{"gaps", to_json(ce.semigroup.gaps())}, {"report", to_json(ce.report)}});
  }
  return Json{{"counts", sweep.counts},
              {"min_margin", sweep.min_margin},
              {"min_margin_by_genus", sweep.min_margin_by_genus},
              {"counterexamples", counter}};
}

Json to_json(const Error& e) {
  Json j{{"error", std::string(e.name())}, {"message", e.what()}};
  const auto& w = e.witness();
  if (e.code() == ErrorCode::NotClosed && w.size() == 3) {
    j["gap"] = w[0];
    j["witness"] = Json::array({w[1], w[2]});
  } else if (!w.empty()) {
    j["witness"] = w;
  }
  return j;
}

Point point_from_json(const Json& j) {
  if (j.is_number_integer()) return Point{integer(j)};
  if (!j.is_array() || j.empty() || j.size() > Point::kMaxDim) {
    bad("expected a point as an array of 1..3 integers, got " + j.dump());
  }
  std::vector<std::int64_t> coords;
  for (const Json& v : j) coords.push_back(integer(v));
  return Point(coords);
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of points");
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(point_from_json(p));
  return out;
}

Cone cone_from_json(const Json& j) {
  if (!j.is_object()) bad("expected a cone object");
  if (j.contains("cone")) return cone_from_json(j.at("cone"));
  std::string type;
  if (j.contains("type")) {
    if (!j.at("type").is_string()) bad("cone \"type\" must be a string");
    type = j.at("type").get<std::string>();
  } else if (j.contains("rays")) {
    type = "rays2d";
  } else if (j.contains("p")) {
    type = "full";
  } else {
    bad("cone needs \"type\", \"rays\" or \"p\"");
  }
  if (type == "full") {
    if (!j.contains("p")) bad("full cone needs \"p\"");
    return Cone::full(static_cast<std::size_t>(integer(j.at("p"))));
  }
  if (type == "rays2d") {
    if (!j.contains("rays")) bad("rays2d cone needs \"rays\"");
    auto rays = points_from_json(j.at("rays"));
    if (rays.size() != 2) bad("rays2d cone needs exactly two rays");
    return Cone::rays2d(rays[0], rays[1]);
  }
  bad("unknown cone type \"" + type + "\"");
}

CSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cone")) bad("semigroup needs a \"cone\"");
  if (!j.contains("gaps")) bad("semigroup needs \"gaps\"");
  return make_csemigroup(cone_from_json(j.at("cone")), points_from_json(j.at("gaps")));
}

GeneratorInput generators_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cone")) bad("generator input needs a \"cone\"");
  if (!j.contains("generators")) bad("generator input needs \"generators\"");
  return GeneratorInput::make(cone_from_json(j.at("cone")), points_from_json(j.at("generators")));
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace conesemi::io
