#include "conesemi/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "conesemi/construct.hpp"
#include "conesemi/error.hpp"
#include "conesemi/genexp.hpp"
#include "conesemi/json_io.hpp"
#include "conesemi/oracle.hpp"
#include "conesemi/semigroup.hpp"
#include "conesemi/svg.hpp"
#include "conesemi/wilf.hpp"

namespace conesemi {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string out;
  std::string cone_file;
  std::string order = "cone";
  std::size_t max_genus = 0;
  unsigned jobs = 1;
  std::string svg;
  std::string point;
  std::string points;
  std::size_t ray = 0;
  std::string pattern_gaps;
  std::string pattern_generators;
  std::string target = "10";
  bool report = false;
  bool list = false;
  bool levels = false;
  bool show_pf = false;
  bool show_msg = false;
  std::int64_t margin = 3;
  std::int64_t cap = -1;
  std::size_t genus = 0;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-" || path.empty()) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

Order parse_order(const std::string& s) {
  if (s == "cone") return Order::Cone;
  if (s == "induced") return Order::Induced;
  throw UsageError("--order must be cone or induced");
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  return out;
}

Point parse_point(const std::string& text) {
  auto coords = parse_ints(text);
  if (coords.empty() || coords.size() > Point::kMaxDim) throw UsageError("bad point: " + text);
  return Point(coords);
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) out.push_back(parse_point(item));
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw UsageError("not a rational number: " + text);
  }
}

class Driver {
 public:
  Driver(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Options opt;

  Json input_json() { return io::parse(read_text(opt.input, in_)); }
  CSemigroup semigroup() {
    Json j = input_json();
    if (j.contains("generators") && !j.contains("gaps")) return expand(io::generators_from_json(j));
    return io::semigroup_from_json(j);
  }
  Cone cone(const Cone& fallback) {
    if (opt.cone_file.empty()) return fallback;
    const bool inline_json = opt.cone_file.find_first_of("{[") == 0;
    return io::cone_from_json(io::parse(inline_json ? opt.cone_file : read_text(opt.cone_file, in_)));
  }
  Cone required_cone() {
    if (opt.cone_file.empty()) throw UsageError("--cone is required");
    return cone(Cone::full(2));
  }

  void emit_text(const std::string& text) {
    if (opt.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(opt.out);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + opt.out);
    file << text;
  }
  void emit(const Json& j) { emit_text(io::dump(j)); }

 private:
  std::istream& in_;
  std::ostream& out_;
};

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Semigroup JSON file ('-' for stdin)")->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to FILE instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Driver d(in, out);
  Options& o = d.opt;

  CLI::App app{"conesemi: invariants of C-semigroups under their induced order"};
  app.require_subcommand(1);
  app.footer(
      "Semigroup JSON: {\"cone\":{\"type\":\"rays2d\",\"rays\":[[1,0],[1,1]]},\"gaps\":[[1,1],[2,2]]}\n"
      "Generator JSON: {\"cone\":{\"type\":\"full\",\"p\":2},\"generators\":[[1,0],[0,1]]}\n"
      "Environment: CONESEMI_CAPACITY overrides the point-count caps (default 10000000).\n"
      "Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error or malformed input.");

  auto* gaps = app.add_subcommand("gaps", "Expand generators (or canonicalise gaps) to semigroup JSON");
  add_input(gaps, o);
  auto* validate = app.add_subcommand("validate", "Validate a semigroup");
  add_input(validate, o);
  auto* msg = app.add_subcommand("msg", "Minimal generating set");
  add_input(msg, o);
  auto* frob = app.add_subcommand("frobenius", "Frobenius set (maximal gaps)");
  add_input(frob, o);
  frob->add_option("--order", o.order, "cone|induced")->capture_default_str();
  auto* pf = app.add_subcommand("pf", "Pseudo-Frobenius set");
  add_input(pf, o);
  auto* felem = app.add_subcommand("felements", "Frobenius elements (maxima under term orders)");
  add_input(felem, o);
  auto* apery = app.add_subcommand("apery", "Apery set with respect to --b");
  add_input(apery, o);
  apery->add_option("--b", o.point, "Nonzero element, e.g. 1,0")->required();
  auto* weights = app.add_subcommand("weights", "Weight set W as excluded levels");
  add_input(weights, o);
  auto* elast = app.add_subcommand("elasticity", "Quasi-elasticity max w(F) / min w(F)");
  add_input(elast, o);
  auto* restrict_cmd = app.add_subcommand("restrict", "Numerical semigroup on an extremal ray");
  add_input(restrict_cmd, o);
  restrict_cmd->add_option("--ray", o.ray, "Ray index")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Build semigroups to order");
  construct->require_subcommand(1);
  auto* idem = construct->add_subcommand("idemaxial", "Idemaxial semigroup over a 2D cone");
  idem->add_option("--cone", o.cone_file, "Cone JSON file or inline JSON (default N^2)");
  idem->add_option("--pattern-gaps", o.pattern_gaps, "Gaps of the ray pattern, e.g. 1,2,4,7");
  idem->add_option("--pattern-generators", o.pattern_generators, "Generators of the ray pattern");
  idem->add_flag("--report", o.report, "Also report Frobenius band and PF-line check");
  idem->add_option("--out", o.out, "Output file");
  auto* high = construct->add_subcommand("elasticity", "Semigroup with quasi-elasticity > target");
  high->add_option("--cone", o.cone_file, "Cone JSON file or inline JSON (default N^2)");
  high->add_option("--target", o.target, "Rational target, e.g. 10 or 7/2")->capture_default_str();
  high->add_option("--out", o.out, "Output file");
  auto* lower = construct->add_subcommand("lower-set", "Remove cone-lower sets of points");
  lower->add_option("--cone", o.cone_file, "Cone JSON file or inline JSON (default N^2)");
  lower->add_option("--points", o.points, "Points, e.g. '1,1;10,0'")->required();
  lower->add_option("--out", o.out, "Output file");

  auto* wilf = app.add_subcommand("wilf", "Generalised Wilf inequality e*n >= p*c");
  wilf->require_subcommand(1);
  auto* wreport = wilf->add_subcommand("report", "Wilf quantities of one semigroup");
  add_input(wreport, o);
  wreport->add_option("--order", o.order, "cone|induced")->capture_default_str();
  auto* sweep = wilf->add_subcommand("sweep", "Check every semigroup up to a genus");
  sweep->add_option("--cone", o.cone_file, "Cone JSON file or inline JSON")->required();
  sweep->add_option("--max-genus", o.max_genus, "Largest genus")->required();
  sweep->add_option("--order", o.order, "cone|induced")->capture_default_str();
  sweep->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  sweep->add_option("--out", o.out, "Report file");

  auto* enumerate = app.add_subcommand("enumerate", "Count C-semigroups by genus");
  enumerate->add_option("--cone", o.cone_file, "Cone JSON file or inline JSON")->required();
  enumerate->add_option("--max-genus", o.max_genus, "Largest genus")->required();
  enumerate->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  enumerate->add_flag("--list", o.list, "Include the gap sets");
  enumerate->add_option("--out", o.out, "Output file");

  auto* plot = app.add_subcommand("plot", "SVG plot of a two-dimensional semigroup");
  add_input(plot, o);
  plot->add_option("--svg", o.svg, "SVG output file (default stdout)");
  plot->add_option("--order", o.order, "Order for the circled Frobenius set")->capture_default_str();
  plot->add_option("--margin", o.margin, "Extra units beyond the gaps")->capture_default_str();
  plot->add_flag("--levels", o.levels, "Draw weight level lines");
  plot->add_flag("--pf", o.show_pf, "Mark pseudo-Frobenius elements");
  plot->add_flag("--msg", o.show_msg, "Mark minimal generators");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  auto* omember = oracle_cmd->add_subcommand("member", "Membership in <generators> by graded sweep");
  add_input(omember, o);
  omember->add_option("--point", o.point, "Point to test")->required();
  omember->add_option("--cap", o.cap, "Weight cap (default: weight of the point)");
  auto* ominimals = oracle_cmd->add_subcommand("minimals", "Minimal elements by pairwise scan");
  add_input(ominimals, o);
  ominimals->add_option("--cap", o.cap, "Weight cap (default: generator bound)");
  auto* ogapsets = oracle_cmd->add_subcommand("gapsets", "All closed gap sets of a genus");
  ogapsets->add_option("--cone", o.cone_file, "Cone JSON file or inline JSON")->required();
  ogapsets->add_option("--genus", o.genus, "Genus")->required();
  ogapsets->add_option("--cap", o.cap, "Weight cap (default: proven bound)");
  ogapsets->add_option("--out", o.out, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Order order = parse_order(o.order);
    if (*gaps) {
      d.emit(io::to_json(d.semigroup()));
    } else if (*validate) {
      const CSemigroup s = d.semigroup();
      d.emit(Json{{"valid", true}, {"genus", s.genus()}});
    } else if (*msg) {
      d.emit(Json{{"minimal_generators", io::to_json(minimal_generators(d.semigroup()))}});
    } else if (*frob) {
      d.emit(Json{{"frobenius_set", io::to_json(frobenius_set(d.semigroup(), order))}});
    } else if (*pf) {
      d.emit(Json{{"pseudo_frobenius", io::to_json(pseudo_frobenius(d.semigroup()))}});
    } else if (*felem) {
      d.emit(Json{{"frobenius_elements", io::to_json(frobenius_elements(d.semigroup()))}});
    } else if (*apery) {
      d.emit(Json{{"apery_set", io::to_json(apery_set(d.semigroup(), parse_point(o.point)))}});
    } else if (*weights) {
      d.emit(Json{{"excluded", weight_set(d.semigroup()).excluded}});
    } else if (*elast) {
      d.emit(Json{{"quasi_elasticity", quasi_elasticity(d.semigroup()).to_string()}});
    } else if (*restrict_cmd) {
      const CSemigroup s = d.semigroup();
      Json j = io::to_json(ray_restriction(s, o.ray));
      j["ray"] = io::to_json(s.cone().rays().at(o.ray));
      d.emit(j);
    } else if (*idem) {
      if (o.pattern_gaps.empty() == o.pattern_generators.empty()) {
        throw UsageError("give exactly one of --pattern-gaps and --pattern-generators");
      }
      const IdemaxialSpec spec{
          d.cone(Cone::full(2)),
          o.pattern_gaps.empty() ? NumericalSemigroup::from_generators(parse_ints(o.pattern_generators))
                                 : NumericalSemigroup::from_gaps(parse_ints(o.pattern_gaps))};
      const CSemigroup s = idemaxial(spec);
      if (!o.report) {
        d.emit(io::to_json(s));
      } else {
        Json j{{"semigroup", io::to_json(s)}};
        if (spec.pattern.genus() > 0) {
          const LevelBand band = frobenius_band(spec);
          const PfLinesReport pfr = pf_lines_check(spec);
          j["frobenius_band"] = Json::array({band.lo.to_string(), band.hi.to_string()});
          j["pf_lines"] = Json{{"pattern_pf", pfr.pattern_pf},
                               {"frobenius_line_contained", pfr.frobenius_line_contained},
                               {"all_lines_contained", pfr.all_lines_contained},
                               {"counterexamples", io::to_json(pfr.counterexamples)},
                               {"off_lines", io::to_json(pfr.off_lines)}};
        }
        d.emit(j);
      }
    } else if (*high) {
      const CSemigroup s = high_elasticity(d.cone(Cone::full(2)), parse_rational(o.target));
      Json j = io::to_json(s);
      j["quasi_elasticity"] = quasi_elasticity(s).to_string();
      d.emit(j);
    } else if (*lower) {
      d.emit(io::to_json(lower_set_semigroup(d.cone(Cone::full(2)), parse_points(o.points))));
    } else if (*wreport) {
      d.emit(io::to_json(wilf_report(d.semigroup(), order)));
    } else if (*sweep) {
      const Cone c = d.required_cone();
      Json j = io::to_json(wilf_sweep(c, o.max_genus, order, o.jobs));
      j["cone"] = io::to_json(c);
      j["order"] = o.order;
      j["max_genus"] = o.max_genus;
      d.emit(j);
    } else if (*enumerate) {
      const Cone c = d.required_cone();
      const auto levels = enumerate_genus(c, o.max_genus, o.jobs);
      Json counts = Json::array(), sets = Json::array();
      for (const auto& level : levels) {
        counts.push_back(level.count());
        if (o.list) {
          Json group = Json::array();
          for (const auto& s : level.semigroups) group.push_back(io::to_json(s.gaps()));
          sets.push_back(group);
        }
      }
      Json j{{"counts", counts}, {"cone", io::to_json(c)}};
      if (o.list) j["gapsets"] = sets;
      d.emit(j);
    } else if (*plot) {
      RenderSpec spec;
      spec.margin = o.margin;
      spec.order = order;
      spec.level_lines = o.levels;
      spec.pseudo_frobenius = o.show_pf;
      spec.generators = o.show_msg;
      const std::string svg = render_svg(d.semigroup(), spec);
      if (o.svg.empty() || o.svg == "-") {
        out << svg;
      } else {
        std::ofstream file(o.svg);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + o.svg);
        file << svg;
      }
    } else if (*omember) {
      const GeneratorInput g = io::generators_from_json(d.input_json());
      const Point x = parse_point(o.point);
      const std::int64_t cap = o.cap >= 0 ? o.cap : x.weight();
      d.emit(Json{{"member", oracle::oracle_member(g.generators, x, cap)}});
    } else if (*ominimals) {
      const CSemigroup s = d.semigroup();
      const std::int64_t cap = o.cap >= 0 ? o.cap : generator_weight_bound(s);
      d.emit(Json{{"minimal_generators", io::to_json(oracle::oracle_minimals(s, cap))}});
    } else if (*ogapsets) {
      const Cone c = d.required_cone();
      const std::int64_t cap = o.cap >= 0 ? o.cap : oracle::gapset_weight_bound(c, o.genus);
      const auto sets = oracle::oracle_all_gapsets(c, o.genus, cap);
      Json list = Json::array();
      for (const auto& s : sets) list.push_back(io::to_json(s));
      d.emit(Json{{"count", sets.size()}, {"gapsets", list}});
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << io::dump(io::to_json(e));
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 0;
}

}  // namespace conesemi
