#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "shadowpos/solvers.hpp"

namespace shadowpos {

inline constexpr std::size_t kMaxPathCoverOrder = 20;
inline constexpr std::size_t kMaxCycleCoverOrder = 14;
inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

struct CoverCandidates {
  // One representative vertex sequence per distinct vertex set.
  std::map<VertexSet::Word, std::vector<Vertex>> by_mask;
  bool truncated = false;
};

// All geodesics (including single vertices), walked along the BFS DAG of
// each pair u < v. Stops once `cap` paths have been seen.
inline CoverCandidates enumerate_geodesics(const Graph& g, const DistanceTable& t,
                                           std::size_t cap = kDefaultEnumerationCap) {
  CoverCandidates out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v = 0; v < n; ++v) out.by_mask.emplace(VertexSet::bit(v), std::vector<Vertex>{v});
  std::size_t seen = 0;
  std::vector<Vertex> path;
  auto walk = [&](auto&& self, Vertex u, Vertex target, VertexSet::Word on_geodesic, VertexSet::Word mask) -> void {
    if (out.truncated) return;
    const Vertex cur = path.back();
    if (cur == target) {
      if (++seen > cap) {
        out.truncated = true;
        return;
      }
      out.by_mask.emplace(mask, path);
      return;
    }
    const Distance k = t.at(u, cur) + 1;
    for (Vertex w : VertexSet(n, g.row(cur) & on_geodesic & t.sphere_bits(u, k))) {
      path.push_back(w);
      self(self, u, target, on_geodesic, mask | VertexSet::bit(w));
      path.pop_back();
    }
  };
  for (Vertex u = 0; u < n && !out.truncated; ++u)
    for (Vertex v = u + 1; v < n && !out.truncated; ++v) {
      if (!t.finite(u, v)) continue;
      path.assign(1, u);
      walk(walk, u, v, t.interval_bits(u, v), VertexSet::bit(u));
    }
  return out;
}

// Isometric cycles: cycles c_0..c_{L-1} with d_G(c_i, c_j) equal to the
// distance along the cycle. Each is found once, rooted at its smallest vertex
// with c_1 < c_{L-1}; the per-position distance constraint prunes the walk.
inline CoverCandidates enumerate_isometric_cycles(const Graph& g, const DistanceTable& t,
                                                  std::size_t cap = kDefaultEnumerationCap) {
  CoverCandidates out;
  const auto n = static_cast<Vertex>(g.order());
  const Distance diam = t.diameter();
  if (diam == kUnreachable || n < 3) return out;
  std::size_t seen = 0;
  std::vector<Vertex> cycle;
  for (std::size_t len = 3; len <= std::min<std::size_t>(2 * diam + 1, n); ++len) {
    auto cyc_dist = [&](std::size_t i, std::size_t j) { return static_cast<Distance>(std::min(j - i, len - (j - i))); };
    auto walk = [&](auto&& self, VertexSet::Word used) -> void {
      if (out.truncated) return;
      const std::size_t pos = cycle.size();
      if (pos == len) {
        if (cycle[1] > cycle.back()) return;
        if (++seen > cap) {
          out.truncated = true;
          return;
        }
        out.by_mask.emplace(used, cycle);
        return;
      }
      const Vertex root = cycle.front();
      for (Vertex w : VertexSet(n, g.row(cycle.back()) & ~used & ~VertexSet::full_mask(root + 1))) {
        bool ok = true;
        for (std::size_t q = 0; q < pos && ok; ++q) ok = t.at(cycle[q], w) == cyc_dist(q, pos);
        if (!ok) continue;
        cycle.push_back(w);
        self(self, used | VertexSet::bit(w));
        cycle.pop_back();
      }
    };
    for (Vertex root = 0; root < n && !out.truncated; ++root) {
      cycle.assign(1, root);
      walk(walk, VertexSet::bit(root));
    }
  }
  return out;
}

struct SetCoverResult {
  std::vector<VertexSet::Word> chosen;
  bool coverable = true;
  bool exact = true;
  std::uint64_t nodes = 0;
};

// Exact minimum set cover of `universe` by branch and bound: branch on the
// uncovered element with the fewest covering sets, bound by
// ceil(|uncovered| / largest set). Dominated sets are dropped first.
inline SetCoverResult minimum_set_cover(VertexSet::Word universe, std::vector<VertexSet::Word> sets,
                                        std::uint64_t node_budget = kDefaultNodeBudget) {
  SetCoverResult result;
  std::sort(sets.begin(), sets.end(), [](auto a, auto b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet::Word> kept;
  for (auto s : sets) {
    s &= universe;
    if (s == 0) continue;
    bool dominated = false;
    for (auto k : kept)
      if ((s & ~k) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  VertexSet::Word reachable = 0;
  for (auto s : kept) reachable |= s;
  if (reachable != universe) {
    result.coverable = false;
    return result;
  }
  if (universe == 0) return result;

  // Greedy incumbent.
  std::vector<VertexSet::Word> best;
  for (VertexSet::Word left = universe; left != 0;) {
    auto pick = *std::max_element(kept.begin(), kept.end(),
                                  [&](auto a, auto b) { return std::popcount(a & left) < std::popcount(b & left); });
    best.push_back(pick);
    left &= ~pick;
  }

  std::vector<VertexSet::Word> chosen;
  bool exhausted = false;
  auto solve = [&](auto&& self, VertexSet::Word left) -> void {
    if (exhausted) return;
    if (++result.nodes > node_budget) {
      exhausted = true;
      return;
    }
    if (left == 0) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    int widest = 0;
    for (auto s : kept) widest = std::max(widest, std::popcount(s & left));
    const std::size_t lower = (static_cast<std::size_t>(std::popcount(left)) + widest - 1) / widest;
    if (chosen.size() + lower >= best.size()) return;
    Vertex pivot = 0;
    std::size_t fewest = kept.size() + 1;
    for (Vertex e : VertexSet(64, left)) {
      std::size_t count = 0;
      for (auto s : kept) count += (s >> e) & 1U;
      if (count < fewest) {
        fewest = count;
        pivot = e;
      }
    }
    std::vector<VertexSet::Word> options;
    for (auto s : kept)
      if ((s >> pivot) & 1U) options.push_back(s);
    std::stable_sort(options.begin(), options.end(),
                     [&](auto a, auto b) { return std::popcount(a & left) > std::popcount(b & left); });
    for (auto s : options) {
      chosen.push_back(s);
      self(self, left & ~s);
      chosen.pop_back();
    }
  };
  solve(solve, universe);
  result.chosen = best;
  result.exact = !exhausted;
  return result;
}

namespace detail {

inline InvariantReport cover_report(Invariant which, const CoverCandidates& candidates, const Graph& g,
                                    std::chrono::steady_clock::time_point start, std::uint64_t budget) {
  std::vector<VertexSet::Word> masks;
  for (const auto& [mask, seq] : candidates.by_mask) masks.push_back(mask);
  const auto cover = minimum_set_cover(VertexSet::full_mask(g.order()), masks, budget);
  InvariantReport report;
  report.invariant = which;
  report.coverable = cover.coverable;
  report.exact = cover.exact && !candidates.truncated;
  report.value = cover.chosen.size();
  report.nodes_explored = cover.nodes;
  for (auto mask : cover.chosen) report.cover.push_back(candidates.by_mask.at(mask));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace detail

// ip(G): fewest geodesics covering V(G). The witness lists one vertex
// sequence per chosen geodesic.
inline InvariantReport isometric_path_cover(const Graph& g, const DistanceTable& t,
                                            std::size_t cap = kDefaultEnumerationCap,
                                            std::uint64_t node_budget = kDefaultNodeBudget) {
  detail::require_connected(g, "isometric_path_cover");
  if (g.order() > kMaxPathCoverOrder)
    throw PreconditionError("isometric_path_cover is limited to " + std::to_string(kMaxPathCoverOrder) + " vertices");
  const auto start = std::chrono::steady_clock::now();
  return detail::cover_report(Invariant::ip, enumerate_geodesics(g, t, cap), g, start, node_budget);
}

inline InvariantReport isometric_path_cover(const Graph& g) { return isometric_path_cover(g, distances(g)); }

// ic(G): fewest isometric cycles covering V(G). coverable = false when some
// vertex lies on no isometric cycle (value is then meaningless, reported 0).
inline InvariantReport isometric_cycle_cover(const Graph& g, const DistanceTable& t,
                                             std::size_t cap = kDefaultEnumerationCap,
                                             std::uint64_t node_budget = kDefaultNodeBudget) {
  detail::require_connected(g, "isometric_cycle_cover");
  if (g.order() > kMaxCycleCoverOrder)
    throw PreconditionError("isometric_cycle_cover is limited to " + std::to_string(kMaxCycleCoverOrder) + " vertices");
  const auto start = std::chrono::steady_clock::now();
  auto report = detail::cover_report(Invariant::ic, enumerate_isometric_cycles(g, t, cap), g, start, node_budget);
  if (!report.coverable) report.value = 0;
  return report;
}

inline InvariantReport isometric_cycle_cover(const Graph& g) { return isometric_cycle_cover(g, distances(g)); }

}  // namespace shadowpos
