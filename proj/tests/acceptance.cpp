// Acceptance suite: one [PASS]/[FAIL] line per criterion, with the failed
// sub-checks listed underneath. Exit status is nonzero if any selected
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conesemi/cli.hpp"
#include "conesemi/construct.hpp"
#include "conesemi/genexp.hpp"
#include "conesemi/json_io.hpp"
#include "conesemi/oracle.hpp"
#include "conesemi/semigroup.hpp"
#include "conesemi/wilf.hpp"

using namespace conesemi;

namespace {

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

Cone diag() { return Cone::rays2d(Point{1, 0}, Point{1, 1}); }
Cone wide() { return Cone::rays2d(Point{2, 1}, Point{1, 3}); }

CSemigroup s_a() { return make_csemigroup(diag(), {Point{1, 1}, Point{2, 2}}); }
CSemigroup s_b() {
  return make_csemigroup(diag(), {Point{1, 0}, Point{1, 1}, Point{2, 0}, Point{2, 2}, Point{3, 0},
                                  Point{3, 1}, Point{4, 0}});
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool contains(const std::vector<Point>& v, const Point& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool subset(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Point& x) { return contains(b, x); });
}

std::string describe(const CSemigroup& s) { return io::dump(io::to_json(s.gaps())); }

std::string cone_name(const Cone& c) { return io::to_json(c).dump(); }

std::vector<std::size_t> counts(const std::vector<GenusLevel>& levels) {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.count());
  return out;
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void ac1(Criterion& c) {
  const auto s = s_a();
  c.check(frobenius_set(s) == std::vector<Point>{Point{2, 2}}, "F(S_A) = {(2,2)}");
  const auto pf = pseudo_frobenius(s);
  c.check(contains(pf, Point{1, 1}), "(1,1) in PF(S_A)");
  c.check(!contains(frobenius_set(s), Point{1, 1}), "(1,1) not in F(S_A)");
  c.check(weight_set(s).excluded == std::vector<std::int64_t>{4}, "W(S_A) excludes exactly {4}");
}

void ac2(Criterion& c) {
  CSemigroup s = make_csemigroup(diag(), {});
  try {
    s = s_b();
    c.check(true, "S_B validates");
  } catch (const Error& e) {
    c.check(false, std::string("S_B validates: ") + e.what());
    return;
  }
  const auto frob = frobenius_set(s);
  const auto fel = frobenius_elements(s);
  c.check(frob == sorted({Point{4, 0}, Point{3, 1}, Point{2, 2}}), "F(S_B) = {(4,0),(3,1),(2,2)}");
  c.check(fel == sorted({Point{4, 0}, Point{2, 2}}), "Frobenius elements = {(4,0),(2,2)}");
  c.check(subset(fel, frob) && fel.size() < frob.size(), "strict inclusion");
  // Documented conflict: (3,0) is maximal only under the induced order.
  c.check(!contains(frob, Point{3, 0}), "(3,0) is not maximal under the cone order");
  c.check(contains(frobenius_set(s, Order::Induced), Point{3, 0}),
          "(3,0) is maximal under the induced order");
}

void ac3(Criterion& c, unsigned jobs) {
  for (const Cone& cone : {Cone::full(2), diag()}) {
    for (const auto& level : enumerate_genus(cone, 5, jobs)) {
      for (const CSemigroup& s : level.semigroups) {
        const std::string tag = cone_name(cone) + " " + describe(s);
        const auto frob = frobenius_set(s);
        c.check(minimal_generators(s) == oracle::oracle_minimals(s, generator_weight_bound(s)),
                "msg = oracle minimals " + tag);
        for (const Point& x : frob) {
          for (const Point& y : frob) {
            if (x != y) c.check(!cone_leq(cone, x, y), "antichain " + tag);
          }
        }
        if (s.genus() == 0) continue;
        c.check(subset(frob, pseudo_frobenius(s)), "F in PF " + tag);
        c.check(subset(frobenius_elements(s), frob), "Frobenius elements in F " + tag);
        for (const Point& b : enumerate_cone_points(cone, 8, 1'000'000)) {
          if (b.is_zero() || !s.contains(b)) continue;
          std::vector<Point> shifted;
          for (const Point& a : apery_set(s, b)) shifted.push_back(a - b);
          c.check(subset(frob, shifted), "F in Ap(S,b)-b for b=" + b.to_string() + " " + tag);
        }
      }
    }
  }
}

void ac4(Criterion& c, unsigned jobs) {
  for (const Cone& cone : {Cone::full(2), diag()}) {
    for (const auto& level : enumerate_genus(cone, 5, jobs)) {
      for (const CSemigroup& s : level.semigroups) {
        try {
          c.check(expand(GeneratorInput::make(cone, minimal_generators(s))) == s,
                  "round trip " + cone_name(cone) + " " + describe(s));
        } catch (const Error& e) {
          c.check(false, "round trip threw " + std::string(e.what()) + " " + describe(s));
        }
      }
    }
  }
}

void ac5(Criterion& c, unsigned jobs) {
  for (const Cone& cone : {Cone::full(2), diag()}) {
    const auto levels = enumerate_genus(cone, 3, jobs);
    for (std::size_t g = 0; g <= 3; ++g) {
      const auto sets = oracle::oracle_all_gapsets(cone, g, oracle::gapset_weight_bound(cone, g));
      c.check(levels[g].count() == sets.size(),
              cone_name(cone) + " genus " + std::to_string(g) + ": " +
                  std::to_string(levels[g].count()) + " vs oracle " + std::to_string(sets.size()));
    }
  }
  const auto full = counts(enumerate_genus(Cone::full(2), 3, jobs));
  const auto oracle3 = oracle::oracle_all_gapsets(Cone::full(2), 3,
                                                  oracle::gapset_weight_bound(Cone::full(2), 3));
  c.check(full == std::vector<std::size_t>{1, 2, 7, oracle3.size()},
          "FullCone(2) counts " + list(full));
  const auto one = counts(enumerate_genus(Cone::full(1), 5, jobs));
  c.check(one == std::vector<std::size_t>{1, 1, 2, 4, 7, 12}, "FullCone(1) counts " + list(one));
}

void ac6(Criterion& c, unsigned jobs) {
  for (const Cone& cone : {Cone::full(2), diag(), wide()}) {
    const auto sweep = wilf_sweep(cone, 6, Order::Cone, jobs);
    c.check(sweep.counterexamples.empty(),
            cone_name(cone) + ": " + std::to_string(sweep.counterexamples.size()) +
                " counterexamples, counts " + list(sweep.counts));
  }
  c.check(wilf_report(s_a()).margin == 0, "S_A margin 0");
  for (const auto& gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5}, {4, 6, 9}}) {
    const auto n = NumericalSemigroup::from_generators(gens);
    std::vector<Point> gaps;
    for (std::int64_t g : n.gaps()) gaps.push_back(Point{g});
    const auto r = wilf_report(make_csemigroup(Cone::full(1), gaps));
    // Classical quantities: embedding dimension, left elements, conductor.
    const bool same = r.e == n.minimal_generators().size() && r.n == n.left_elements() &&
                      r.c == static_cast<std::size_t>(n.conductor()) && r.p == 1;
    c.check(same, "p=1 reduction for generators " + std::to_string(gens.front()) + ",...");
  }
}

void ac7(Criterion& c) {
  for (const Cone& cone : {Cone::full(2), diag()}) {
    for (std::int64_t m : {1, 2, 5, 10, 100}) {
      const Rational rho = quasi_elasticity(high_elasticity(cone, Rational(m)));
      c.check(rho > Rational(m),
              cone_name(cone) + " M=" + std::to_string(m) + " rho=" + rho.to_string());
    }
  }
}

void ac8(Criterion& c) {
  const IdemaxialSpec spec{Cone::full(2), NumericalSemigroup::from_generators({3, 5})};
  const auto s = idemaxial(spec);
  c.check(s.genus() == 18, "genus " + std::to_string(s.genus()) + " == 18");
  c.check(ray_restriction(s, 0) == spec.pattern && ray_restriction(s, 1) == spec.pattern,
          "ray restrictions <3,5>");
  std::vector<Point> level7;
  for (std::int64_t a = 0; a <= 7; ++a) level7.push_back(Point{a, 7 - a});
  const auto frob = frobenius_set(s);
  c.check(frob == sorted(level7), "F = the 8 weight-7 points");
  c.check(pseudo_frobenius(s) == frob, "PF = F");
  const auto excluded = weight_set(s).excluded;
  std::string shown;
  for (std::int64_t t : excluded) shown += (shown.empty() ? "" : ",") + std::to_string(t);
  c.check(excluded == std::vector<std::int64_t>{7}, "W = N\\{7} (computed excluded {" + shown + "})");

  for (const Cone& cone : {Cone::full(2), diag()}) {
    for (const auto& gens : std::vector<std::vector<std::int64_t>>{{3, 5}, {2, 3}, {3, 4}, {4, 7, 9}}) {
      const IdemaxialSpec sp{cone, NumericalSemigroup::from_generators(gens)};
      const LevelBand band = frobenius_band(sp);
      for (const Point& f : frobenius_set(idemaxial(sp))) {
        const Rational level = idemaxial_level(cone, f);
        c.check(band.lo <= level && level <= band.hi,
                "band containment " + cone_name(cone) + " f=" + f.to_string());
      }
    }
  }

  const auto report = pf_lines_check(spec);
  c.check(report.frobenius_line_contained, "Frobenius level line in PF(S)");
  bool level4 = false;
  for (const Point& x : report.counterexamples) {
    if (x.weight() == 4) level4 = true;
  }
  std::string pf;
  for (std::int64_t t : report.pattern_pf) pf += (pf.empty() ? "" : ",") + std::to_string(t);
  c.check(level4, "pf_lines_check records a level-4 counterexample (PF(<3,5>) = {" + pf +
                      "}, counterexamples: " + std::to_string(report.counterexamples.size()) + ")");
}

std::string cli_output(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

void ac9(Criterion& c) {
  for (const Cone& cone : {Cone::full(2), diag(), wide()}) {
    const std::string one = io::dump(io::to_json(wilf_sweep(cone, 5, Order::Cone, 1)));
    const std::string four = io::dump(io::to_json(wilf_sweep(cone, 5, Order::Cone, 4)));
    const std::string again = io::dump(io::to_json(wilf_sweep(cone, 5, Order::Cone, 4)));
    c.check(one == four && four == again, "sweep jobs 1 vs 4 " + cone_name(cone));
  }
  const std::string sa = io::dump(io::to_json(s_a()));
  const std::string sb = io::dump(io::to_json(s_b()));
  const std::string bad = R"({"cone":{"type":"full","p":2},"gaps":[[1,1]]})";
  const std::vector<std::pair<std::vector<std::string>, std::string>> runs = {
      {{"gaps"}, sb},
      {{"validate"}, bad},
      {{"msg"}, sb},
      {{"frobenius"}, sb},
      {{"frobenius", "--order", "induced"}, sb},
      {{"pf"}, sb},
      {{"felements"}, sb},
      {{"apery", "--b", "3,3"}, sa},
      {{"weights"}, sa},
      {{"elasticity"}, sb},
      {{"restrict", "--ray", "1"}, sa},
      {{"wilf", "report"}, sb},
      {{"plot", "--levels", "--pf", "--msg"}, sb},
      {{"construct", "idemaxial", "--pattern-gaps", "1,2,4,7", "--report"}, ""},
      {{"construct", "elasticity", "--target", "10"}, ""},
      {{"wilf", "sweep", "--cone", R"({"p":2})", "--max-genus", "4", "--jobs", "4"}, ""},
      {{"enumerate", "--cone", R"({"rays":[[1,0],[1,1]]})", "--max-genus", "3", "--list"}, ""},
      {{"oracle", "gapsets", "--cone", R"({"p":2})", "--genus", "2"}, ""},
  };
  for (const auto& [args, input] : runs) {
    const std::string first = cli_output(args, input);
    const std::string second = cli_output(args, input);
    c.check(first == second, "byte-stable: " + args.front() + (args.size() > 1 ? " " + args[1] : ""));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  unsigned jobs = 4;
  std::vector<int> only;
  app.add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--only", only, "Run only these criteria (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"worked example S_A: F, PF and W", ac1},
      {"S_B: Frobenius elements strictly inside F, cone vs induced order", ac2},
      {"lemma suite on all genus <= 5 semigroups", [&](Criterion& c) { ac3(c, jobs); }},
      {"expand(minimal_generators(S)) == S for genus <= 5", [&](Criterion& c) { ac4(c, jobs); }},
      {"enumeration counts match the exhaustive oracle", [&](Criterion& c) { ac5(c, jobs); }},
      {"Wilf sweep to genus 6, tight S_A, p=1 reduction", [&](Criterion& c) { ac6(c, jobs); }},
      {"quasi-elasticity exceeds every target", ac7},
      {"idemaxial <3,5> suite", ac8},
      {"determinism of sweeps and CLI output", ac9},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] AC%d %s (%zu checks, %.1fs)\n", c.passed() ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), c.checks(), secs);
    if (!c.passed()) {
      ++failures;
      std::printf("       %zu failed check(s):\n", c.failed());
      for (const auto& f : c.failures()) std::printf("       - %s\n", f.c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
