#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "shadowpos/graph.hpp"

namespace shadowpos {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// All-pairs hop distances of one graph, plus two derived bit tables:
//   interval(u, v): vertices on at least one u,v-geodesic (empty if unreachable)
//   sphere(u, k):   vertices at distance exactly k from u
class DistanceTable {
 public:
  DistanceTable() = default;

  explicit DistanceTable(const Graph& g) : n_(g.order()) {
    dist_.assign(n_ * n_, kUnreachable);
    sphere_.assign(n_ * (n_ + 1), 0);
    for (Vertex s = 0; s < n_; ++s) {
      VertexSet::Word seen = VertexSet::bit(s);
      VertexSet::Word frontier = seen;
      Distance k = 0;
      while (frontier != 0) {
        sphere_[s * (n_ + 1) + k] = frontier;
        for (Vertex v : VertexSet(n_, frontier)) dist_[s * n_ + v] = k;
        VertexSet::Word next = 0;
        for (Vertex v : VertexSet(n_, frontier)) next |= g.row(v);
        frontier = next & ~seen;
        seen |= frontier;
        ++k;
      }
    }
    interval_.assign(n_ * n_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) {
        const Distance duv = at(u, v);
        if (duv == kUnreachable) continue;
        VertexSet::Word mask = 0;
        for (Vertex w = 0; w < n_; ++w) {
          const Distance a = at(u, w), b = at(w, v);
          if (a != kUnreachable && b != kUnreachable && a + b == duv) mask |= VertexSet::bit(w);
        }
        interval_[u * n_ + v] = mask;
      }
  }

  std::size_t order() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  bool finite(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }

  VertexSet interval(Vertex u, Vertex v) const { return VertexSet(n_, interval_[u * n_ + v]); }
  VertexSet::Word interval_bits(Vertex u, Vertex v) const { return interval_[u * n_ + v]; }

  VertexSet::Word sphere_bits(Vertex u, Distance k) const {
    return k <= n_ ? sphere_[u * (n_ + 1) + k] : 0;
  }

  bool connected() const {
    for (Vertex v = 0; v < n_; ++v)
      if (!finite(0, v)) return false;
    return true;
  }

  // Largest finite distance; kUnreachable for disconnected graphs.
  Distance diameter() const {
    Distance best = 0;
    for (Distance d : dist_) {
      if (d == kUnreachable) return kUnreachable;
      best = std::max(best, d);
    }
    return best;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
  std::vector<VertexSet::Word> interval_;
  std::vector<VertexSet::Word> sphere_;
};

inline DistanceTable distances(const Graph& g) { return DistanceTable(g); }

// Betweenness test d(u,w) + d(w,v) = d(u,v); false when d(u,v) is infinite.
inline bool in_interval(const DistanceTable& t, Vertex u, Vertex v, Vertex w) {
  return ((t.interval_bits(u, v) >> w) & 1U) != 0;
}

// Is there a u,v-geodesic whose internal vertices all avoid `forbidden`?
// Layered sweep along d(u, .): a vertex at layer k is reached when some
// neighbour at layer k-1 was reached and is either u or not forbidden.
inline bool geodesic_exists_avoiding(const DistanceTable& t, const Graph& g, Vertex u, Vertex v,
                                     VertexSet forbidden) {
  const Distance d = t.at(u, v);
  if (d == kUnreachable) return false;
  if (d <= 1) return true;
  const VertexSet::Word on_geodesic = t.interval_bits(u, v);
  const VertexSet::Word blocked = forbidden.bits();
  VertexSet::Word reached = VertexSet::bit(u);
  for (Distance k = 1; k <= d; ++k) {
    VertexSet::Word next = 0;
    for (Vertex w : VertexSet(g.order(), reached)) next |= g.row(w);
    reached = next & on_geodesic & t.sphere_bits(u, k);
    if (k < d) reached &= ~blocked;
    if (reached == 0) return false;
  }
  return (reached & VertexSet::bit(v)) != 0;
}

struct StructuralSummary {
  bool connected = false;
  Distance diameter = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  VertexSet leaves;
  bool is_regular = false;
  bool is_triangle_free = true;
  bool has_universal_vertex = false;
};

inline StructuralSummary structural_queries(const Graph& g, const DistanceTable& t) {
  StructuralSummary s;
  const std::size_t n = g.order();
  s.leaves = VertexSet(n);
  s.connected = n == 0 || t.connected();
  s.diameter = n == 0 ? 0 : t.diameter();
  if (n == 0) return s;
  s.min_degree = n;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(v);
    s.min_degree = std::min(s.min_degree, deg);
    s.max_degree = std::max(s.max_degree, deg);
    if (deg == 1) s.leaves.insert(v);
    if (deg + 1 == n) s.has_universal_vertex = true;
    for (Vertex w : g.neighbors(v))
      if (w > v && (g.row(v) & g.row(w)) != 0) s.is_triangle_free = false;
  }
  s.is_regular = s.min_degree == s.max_degree;
  return s;
}

inline StructuralSummary structural_queries(const Graph& g) { return structural_queries(g, distances(g)); }

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet::Word seen = 1, frontier = 1;
  while (frontier != 0) {
    VertexSet::Word next = 0;
    for (Vertex v : VertexSet(g.order(), frontier)) next |= g.row(v);
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == VertexSet::full_mask(g.order());
}

}  // namespace shadowpos
