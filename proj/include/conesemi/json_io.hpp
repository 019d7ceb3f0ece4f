#pragma once

#include <span>
#include <string>

#include "json.hpp"

#include "conesemi/cone.hpp"
#include "conesemi/error.hpp"
#include "conesemi/genexp.hpp"
#include "conesemi/numerical.hpp"
#include "conesemi/point.hpp"
#include "conesemi/semigroup.hpp"
#include "conesemi/wilf.hpp"

// JSON forms:
//   cone       {"type":"full","p":2} or {"type":"rays2d","rays":[[1,0],[1,1]]}
//   semigroup  {"cone":<cone>,"gaps":[[1,1],[2,2]]}
//   generators {"cone":<cone>,"generators":[[1,0],[2,1]]}
// Point lists are emitted in canonical order; keys are sorted, so output is
// byte-stable.
namespace conesemi::io {

using Json = nlohmann::json;

Json to_json(const Point& p);
Json to_json(std::span<const Point> points);
Json to_json(const Cone& c);
Json to_json(const CSemigroup& s);
Json to_json(const NumericalSemigroup& n);
Json to_json(const WilfReport& r);
Json to_json(const WilfSweep& sweep);
Json to_json(const Error& e);

Point point_from_json(const Json& j);
std::vector<Point> points_from_json(const Json& j);
/// Accepts a bare cone object or one wrapped as {"cone": ...}.
Cone cone_from_json(const Json& j);
CSemigroup semigroup_from_json(const Json& j);
GeneratorInput generators_from_json(const Json& j);

Json parse(const std::string& text);
/// Compact dump followed by a newline.
std::string dump(const Json& j);

}  // namespace conesemi::io
