#include "conesemi/wilf.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "conesemi/error.hpp"

namespace conesemi {

namespace {

// Evaluates fn(0..count-1) on up to `jobs` threads; results are stored by
// index so the output is schedule-independent.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<T> out(count);
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

bool by_gaps(const CSemigroup& a, const CSemigroup& b) {
  return std::lexicographical_compare(a.gaps().begin(), a.gaps().end(), b.gaps().begin(),
                                      b.gaps().end());
}

std::vector<CSemigroup> children(const CSemigroup& s) {
  std::vector<CSemigroup> out;
  const auto gens = minimal_generators(s);
  for (const Point& m : gens) {
    if (s.genus() > 0 && !(s.gaps().back() < m)) continue;
    std::vector<Point> gaps(s.gaps().begin(), s.gaps().end());
    gaps.push_back(m);
    out.push_back(make_csemigroup(s.cone(), std::move(gaps)));
  }
  return out;
}

void for_each_level(const Cone& cone, std::size_t max_genus, unsigned jobs,
                    std::size_t capacity,
                    const std::function<void(std::size_t, std::vector<CSemigroup>&)>& visit) {
  std::vector<CSemigroup> frontier{make_csemigroup(cone, {})};
  std::size_t total = 1;
  for (std::size_t g = 0;; ++g) {
    visit(g, frontier);
    if (g == max_genus) break;
    auto grouped = parallel_map<std::vector<CSemigroup>>(
        frontier.size(), jobs, [&](std::size_t i) { return children(frontier[i]); });
    std::vector<CSemigroup> next;
    for (auto& group : grouped) {
      for (auto& child : group) next.push_back(std::move(child));
    }
    total += next.size();
    if (total > capacity) {
      throw Error(ErrorCode::CapacityExceeded,
                  "genus enumeration exceeds capacity " + std::to_string(capacity));
    }
    std::sort(next.begin(), next.end(), by_gaps);
    frontier = std::move(next);
  }
}

}  // namespace

WilfReport wilf_report(const CSemigroup& s, Order order) {
  std::set<Point> below;
  for (const Point& b : s.gaps()) {
    for (const Point& a : cone_lower_set(s.cone(), b)) {
      if (order == Order::Cone || s.contains(b - a)) below.insert(a);
    }
  }
  WilfReport r;
  r.e = minimal_generators(s).size();
  r.c = below.size();
  r.n = static_cast<std::size_t>(
      std::count_if(below.begin(), below.end(), [&](const Point& a) { return s.contains(a); }));
  r.p = s.dim();
  r.margin = checked::sub(checked::mul(static_cast<std::int64_t>(r.e), static_cast<std::int64_t>(r.n)),
                          checked::mul(static_cast<std::int64_t>(r.p), static_cast<std::int64_t>(r.c)));
  r.holds = r.margin >= 0;
  return r;
}

std::vector<GenusLevel> enumerate_genus(const Cone& cone, std::size_t max_genus, unsigned jobs,
                                        std::size_t capacity) {
  std::vector<GenusLevel> levels;
  for_each_level(cone, max_genus, jobs, capacity,
                 [&](std::size_t g, std::vector<CSemigroup>& frontier) {
                   levels.push_back(GenusLevel{g, frontier});
                 });
  return levels;
}

WilfSweep wilf_sweep(const Cone& cone, std::size_t max_genus, Order order, unsigned jobs,
                     std::size_t capacity) {
  WilfSweep sweep;
  sweep.min_margin = std::numeric_limits<std::int64_t>::max();
  for_each_level(cone, max_genus, jobs, capacity,
                 [&](std::size_t, std::vector<CSemigroup>& frontier) {
                   auto reports = parallel_map<WilfReport>(
                       frontier.size(), jobs,
                       [&](std::size_t i) { return wilf_report(frontier[i], order); });
                   std::int64_t level_min = std::numeric_limits<std::int64_t>::max();
                   for (std::size_t i = 0; i < reports.size(); ++i) {
                     level_min = std::min(level_min, reports[i].margin);
                     if (!reports[i].holds) {
                       sweep.counterexamples.push_back({frontier[i], reports[i]});
                     }
                   }
                   sweep.counts.push_back(frontier.size());
                   sweep.min_margin_by_genus.push_back(level_min);
                   sweep.min_margin = std::min(sweep.min_margin, level_min);
                 });
  return sweep;
}

}  // namespace conesemi
