#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "shadowpos/graph.hpp"
#include "shadowpos/metric.hpp"
#include "shadowpos/parallel.hpp"
#include "shadowpos/visibility.hpp"

namespace shadowpos {

enum class Invariant { gp, igp, mu, mu_i, mu_t, mu_it, ip, ic, chi };

inline std::string_view to_string(Invariant inv) {
  switch (inv) {
    case Invariant::gp: return "gp";
    case Invariant::igp: return "igp";
    case Invariant::mu: return "mu";
    case Invariant::mu_i: return "mu_i";
    case Invariant::mu_t: return "mu_t";
    case Invariant::mu_it: return "mu_it";
    case Invariant::ip: return "ip";
    case Invariant::ic: return "ic";
    case Invariant::chi: return "chi";
  }
  return "?";
}

inline Invariant invariant_of(SetProperty p) {
  switch (p) {
    case SetProperty::GP: return Invariant::gp;
    case SetProperty::IGP: return Invariant::igp;
    case SetProperty::MV: return Invariant::mu;
    case SetProperty::IMV: return Invariant::mu_i;
    case SetProperty::TMV: return Invariant::mu_t;
    case SetProperty::ITMV: return Invariant::mu_it;
  }
  return Invariant::gp;
}

inline std::optional<SetProperty> property_of(Invariant inv) {
  switch (inv) {
    case Invariant::gp: return SetProperty::GP;
    case Invariant::igp: return SetProperty::IGP;
    case Invariant::mu: return SetProperty::MV;
    case Invariant::mu_i: return SetProperty::IMV;
    case Invariant::mu_t: return SetProperty::TMV;
    case Invariant::mu_it: return SetProperty::ITMV;
    default: return std::nullopt;
  }
}

struct InvariantReport {
  Invariant invariant = Invariant::gp;
  std::size_t value = 0;
  std::optional<VertexSet> witness;           // set invariants
  std::vector<std::vector<Vertex>> cover;     // ip / ic
  std::vector<std::size_t> coloring;          // chi
  bool exact = true;
  bool coverable = true;                      // false: ic undefined on this graph
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Sequential search; the witness is then the lexicographically smallest
  // maximum set with respect to the static vertex order.
  bool canonical = false;
  std::size_t workers = 0;  // 0: worker_count()
};

namespace detail {

using Clock = std::chrono::steady_clock;

// Descending degree, ties by index.
inline std::vector<Vertex> static_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Incremental feasibility for one hereditary property. The state carries the
// current set and, for general position, the union of open intervals between
// member pairs (any vertex there would sit between two members).
class FeasibilityChecker {
 public:
  struct State {
    VertexSet set;
    VertexSet::Word between = 0;
  };

  FeasibilityChecker(SetProperty property, const Graph& g, const DistanceTable& t)
      : property_(property), g_(g), t_(t) {}

  State empty() const { return {VertexSet(g_.order()), 0}; }

  State extend(const State& s, Vertex v) const {
    State next{s.set.with(v), s.between};
    if (is_gp()) {
      for (Vertex y : s.set) next.between |= t_.interval_bits(v, y);
      next.between &= ~next.set.bits();
    }
    return next;
  }

  bool admits(const State& s, Vertex w) const {
    const VertexSet::Word cur = s.set.bits();
    if (requires_independence(property_) && (g_.row(w) & cur) != 0) return false;
    switch (property_) {
      case SetProperty::GP:
      case SetProperty::IGP: {
        if ((s.between >> w) & 1U) return false;
        for (Vertex y : s.set)
          if ((t_.interval_bits(w, y) & cur & ~VertexSet::bit(y)) != 0) return false;
        return true;
      }
      case SetProperty::MV:
      case SetProperty::IMV: return is_mv_set(g_, t_, s.set.with(w));
      case SetProperty::TMV:
      case SetProperty::ITMV: return is_total_mv_set(g_, t_, s.set.with(w));
    }
    return false;
  }

 private:
  bool is_gp() const { return property_ == SetProperty::GP || property_ == SetProperty::IGP; }

  SetProperty property_;
  const Graph& g_;
  const DistanceTable& t_;
};

struct SharedSearch {
  std::atomic<std::size_t> best_size{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::uint64_t budget = kDefaultNodeBudget;
  std::mutex mutex;
  VertexSet best;

  void offer(VertexSet s) {
    std::lock_guard lock(mutex);
    if (s.size() > best.size()) {
      best = s;
      std::size_t cur = best_size.load();
      while (cur < s.size() && !best_size.compare_exchange_weak(cur, s.size())) {
      }
    }
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const FeasibilityChecker& checker, SharedSearch& shared) : checker_(checker), shared_(shared) {}

  void expand(const FeasibilityChecker::State& state, const std::vector<Vertex>& cands) {
    if (shared_.exhausted.load(std::memory_order_relaxed)) return;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.budget) {
      shared_.exhausted = true;
      return;
    }
    if (state.set.size() > shared_.best_size.load(std::memory_order_relaxed)) shared_.offer(state.set);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      // Strict: an equal-size set found later never replaces the first one.
      if (state.set.size() + (cands.size() - i) <= shared_.best_size.load(std::memory_order_relaxed)) return;
      branch_on(state, cands, i);
      if (shared_.exhausted.load(std::memory_order_relaxed)) return;
    }
  }

  // Take cands[i], drop cands[0..i-1], keep the later ones still admissible.
  void branch_on(const FeasibilityChecker::State& state, const std::vector<Vertex>& cands, std::size_t i) {
    const auto child = checker_.extend(state, cands[i]);
    std::vector<Vertex> rest;
    rest.reserve(cands.size() - i);
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (checker_.admits(child, cands[j])) rest.push_back(cands[j]);
    expand(child, rest);
  }

 private:
  const FeasibilityChecker& checker_;
  SharedSearch& shared_;
};

inline void require_connected(const Graph& g, std::string_view what) {
  if (g.order() == 0 || !is_connected(g))
    throw PreconditionError(std::string(what) + " requires a connected graph");
}

}  // namespace detail

// Exact maximum set with the given hereditary property by branch and bound
// over a static degree-descending vertex order. Exhausting the node budget
// yields exact = false with the best set found so far.
inline InvariantReport max_set(SetProperty property, const Graph& g, const DistanceTable& t,
                               const SearchOptions& options = {}) {
  detail::require_connected(g, "max_set");
  const auto start = detail::Clock::now();
  detail::FeasibilityChecker checker(property, g, t);
  detail::SharedSearch shared;
  shared.budget = options.node_budget;
  shared.best = VertexSet(g.order());

  const auto root = checker.empty();
  std::vector<Vertex> cands;
  for (Vertex v : detail::static_order(g))
    if (checker.admits(root, v)) cands.push_back(v);

  const std::size_t workers = options.canonical ? 1 : (options.workers ? options.workers : worker_count());
  if (workers <= 1) {
    detail::BranchAndBound(checker, shared).expand(root, cands);
  } else {
    // Top-level split: branch i takes cands[i] and excludes cands[0..i-1].
    shared.nodes = 1;
    parallel_for(cands.size(), workers, [&](std::size_t i) {
      if (cands.size() - i <= shared.best_size.load()) return;
      detail::BranchAndBound(checker, shared).branch_on(root, cands, i);
    });
  }

  InvariantReport report;
  report.invariant = invariant_of(property);
  report.witness = shared.best;
  report.value = shared.best.size();
  report.exact = !shared.exhausted.load();
  report.nodes_explored = std::min(shared.nodes.load(), shared.budget);
  report.elapsed = detail::Clock::now() - start;
  return report;
}

inline InvariantReport max_set(SetProperty property, const Graph& g, const SearchOptions& options = {}) {
  return max_set(property, g, distances(g), options);
}

struct HeuristicOptions {
  double seconds = 1.0;
  std::uint64_t seed = 0;
  std::size_t max_restarts = 1'000'000;
  std::optional<std::size_t> target;  // stop once a set this large is found
  std::size_t plateau_moves = 200;    // non-improving moves per restart
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Greedy seeding plus add / (1,2)-swap / (1,1)-swap local search with random
// restarts; restart r draws from splitmix64(seed ^ r). Always exact = false;
// the value is a lower bound certified by re-checking the witness.
inline InvariantReport max_set_heuristic(SetProperty property, const Graph& g, const DistanceTable& t,
                                         const HeuristicOptions& options = {}) {
  const auto start = detail::Clock::now();
  const auto deadline = start + std::chrono::duration_cast<detail::Clock::duration>(
                                    std::chrono::duration<double>(options.seconds));
  const std::size_t n = g.order();
  VertexSet best(n);
  std::uint64_t moves = 0;

  auto feasible = [&](VertexSet s) { return check(property, g, t, s); };
  auto addable = [&](VertexSet s, VertexSet excluded) {
    std::vector<Vertex> out;
    for (Vertex w : s.complement().minus(excluded))
      if (feasible(s.with(w))) out.push_back(w);
    return out;
  };
  auto done = [&] {
    return detail::Clock::now() >= deadline || (options.target && best.size() >= *options.target) ||
           best.size() == n;
  };

  for (std::size_t restart = 0; restart < options.max_restarts && !done(); ++restart) {
    std::mt19937_64 rng(splitmix64(options.seed ^ (0x5851f42d4c957f2dULL * (restart + 1))));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet cur(n);
    for (Vertex v : order)
      if (feasible(cur.with(v))) cur.insert(v);
    if (cur.size() > best.size()) best = cur;

    std::size_t stale = 0;
    VertexSet tabu(n);
    while (stale < options.plateau_moves && !done()) {
      ++moves;
      if (auto add = addable(cur, tabu); !add.empty()) {
        cur.insert(add[rng() % add.size()]);
      } else {
        std::vector<Vertex> members = cur.to_vector();
        std::shuffle(members.begin(), members.end(), rng);
        bool improved = false;
        for (Vertex x : members) {
          const VertexSet reduced = cur.without(x);
          for (Vertex w1 : addable(reduced, VertexSet(n, VertexSet::bit(x)))) {
            auto second = addable(reduced.with(w1), VertexSet(n, VertexSet::bit(x)));
            if (!second.empty()) {
              cur = reduced.with(w1).with(second[rng() % second.size()]);
              improved = true;
              break;
            }
          }
          if (improved) break;
        }
        if (!improved) {
          if (members.empty()) break;
          const Vertex x = members.front();
          auto swaps = addable(cur.without(x), VertexSet(n, VertexSet::bit(x)) | tabu);
          if (swaps.empty()) {
            ++stale;
            tabu = VertexSet(n);
            continue;
          }
          cur = cur.without(x).with(swaps[rng() % swaps.size()]);
          tabu = VertexSet(n, VertexSet::bit(x));
        } else {
          tabu = VertexSet(n);
        }
      }
      if (cur.size() > best.size()) {
        best = cur;
        stale = 0;
      } else {
        ++stale;
      }
    }
  }

  if (!best.empty() && !check(property, g, t, best)) throw std::logic_error("heuristic produced an infeasible set");
  InvariantReport report;
  report.invariant = invariant_of(property);
  report.value = best.size();
  report.witness = best;
  report.exact = false;
  report.nodes_explored = moves;
  report.elapsed = detail::Clock::now() - start;
  return report;
}

inline InvariantReport max_set_heuristic(SetProperty property, const Graph& g, const HeuristicOptions& options = {}) {
  return max_set_heuristic(property, g, distances(g), options);
}

// Maximum clique size by plain bitset branch and bound.
inline std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  auto grow = [&](auto&& self, std::size_t size, VertexSet::Word cands) -> void {
    if (cands == 0) {
      best = std::max(best, size);
      return;
    }
    while (cands != 0) {
      if (size + static_cast<std::size_t>(std::popcount(cands)) <= best) return;
      const auto v = static_cast<Vertex>(std::countr_zero(cands));
      cands &= cands - 1;
      self(self, size + 1, cands & g.row(v));
    }
  };
  grow(grow, 0, VertexSet::full_mask(g.order()));
  return best;
}

inline constexpr std::size_t kMaxColoringOrder = 16;

// Exact chromatic number: try k = omega, omega+1, ... with backtracking over
// a degree-descending order; colouring witness included.
inline InvariantReport chromatic_number(const Graph& g) {
  if (g.order() > kMaxColoringOrder)
    throw PreconditionError("chromatic_number is limited to " + std::to_string(kMaxColoringOrder) + " vertices");
  const auto start = detail::Clock::now();
  const std::size_t n = g.order();
  const auto order = detail::static_order(g);
  std::vector<std::size_t> color(n, 0);
  std::uint64_t nodes = 0;

  auto colorable = [&](std::size_t k) {
    std::vector<std::size_t> assigned(n, k);
    auto place = [&](auto&& self, std::size_t pos, std::size_t used) -> bool {
      ++nodes;
      if (pos == n) return true;
      const Vertex v = order[pos];
      // Symmetry: a fresh colour is only ever the next unused one.
      for (std::size_t c = 0; c < std::min(k, used + 1); ++c) {
        bool clash = false;
        for (Vertex w : g.neighbors(v))
          if (assigned[w] == c) {
            clash = true;
            break;
          }
        if (clash) continue;
        assigned[v] = c;
        if (self(self, pos + 1, std::max(used, c + 1))) return true;
        assigned[v] = k;
      }
      return false;
    };
    if (!place(place, 0, 0)) return false;
    color = assigned;
    return true;
  };

  std::size_t k = std::max<std::size_t>(clique_number(g), n ? 1 : 0);
  while (n > 0 && !colorable(k)) ++k;

  InvariantReport report;
  report.invariant = Invariant::chi;
  report.value = n ? k : 0;
  report.coloring = color;
  report.nodes_explored = nodes;
  report.elapsed = detail::Clock::now() - start;
  return report;
}

}  // namespace shadowpos
