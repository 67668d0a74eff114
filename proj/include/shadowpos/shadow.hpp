#pragma once

#include <string>
#include <vector>

#include "shadowpos/graph.hpp"
#include "shadowpos/metric.hpp"

namespace shadowpos {

// S(G) on 2n vertices. Original vertex i keeps index i; its twin (shadow) is
// i + n. Every serialized witness uses this convention.
class ShadowGraph {
 public:
  ShadowGraph() = default;
  ShadowGraph(Graph graph, std::size_t base_n) : graph_(std::move(graph)), base_n_(base_n) {}

  const Graph& graph() const { return graph_; }
  std::size_t base_order() const { return base_n_; }

  Vertex shadow_of(Vertex v) const { return v + static_cast<Vertex>(base_n_); }
  Vertex twin(Vertex v) const {
    return v < base_n_ ? v + static_cast<Vertex>(base_n_) : v - static_cast<Vertex>(base_n_);
  }
  bool is_shadow(Vertex v) const { return v >= base_n_; }

  VertexSet base_side() const { return VertexSet(graph_.order(), VertexSet::full_mask(base_n_)); }
  VertexSet shadow_side() const { return base_side().complement(); }

 private:
  Graph graph_;
  std::size_t base_n_ = 0;
};

inline constexpr std::string_view kShadowConvention = "vertex i < n is original, i' = i + n is its shadow";

inline ShadowGraph shadow(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("shadow graph requires a connected input");
  const std::size_t n = g.order();
  if (2 * n > kMaxVertices) throw PreconditionError("shadow graph would exceed the vertex limit");
  std::vector<VertexSet::Word> rows(2 * n, 0);
  for (Vertex v = 0; v < n; ++v) {
    // v keeps N(v) and gains the shadows of its neighbours; v' gets N(v).
    rows[v] = g.row(v) | (g.row(v) << n);
    rows[v + n] = g.row(v);
  }
  std::vector<std::string> labels = g.labels();
  for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v) + "'");
  return ShadowGraph(from_rows(std::move(rows), std::move(labels)), n);
}

// S(G) plus an apex (index 2n) adjacent to every shadow vertex.
inline Graph star_shadow(const Graph& g) {
  const ShadowGraph sg = shadow(g);
  const std::size_t n = g.order();
  if (2 * n + 1 > kMaxVertices) throw PreconditionError("star shadow graph would exceed the vertex limit");
  std::vector<VertexSet::Word> rows(sg.graph().rows().begin(), sg.graph().rows().end());
  const Vertex apex = static_cast<Vertex>(2 * n);
  rows.push_back(sg.shadow_side().bits());
  for (Vertex v = static_cast<Vertex>(n); v < apex; ++v) rows[v] |= VertexSet::bit(apex);
  std::vector<std::string> labels = sg.graph().labels();
  labels.emplace_back("s*");
  return from_rows(std::move(rows), std::move(labels));
}

// Applies star_shadow `times` times (C_5 once gives the Groetzsch graph).
inline Graph iterate_star_shadow(Graph g, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) g = star_shadow(g);
  return g;
}

struct DistanceViolation {
  Vertex x = 0, y = 0;
  std::string pair;  // "x,y", "x,y'" or "x',y'"
  Distance expected = 0;
  Distance actual = 0;
};

// Compares the distances of S(G) against their predicted values from G:
//   xy not an edge:  d(x,y) = d(x,y') = d(x',y') = d_G(x,y)
//   xy an edge:      d(x,y) = d(x,y') = 1, d(x',y') = 2 with a common
//                    neighbour, 3 otherwise
inline std::vector<DistanceViolation> shadow_distance_check(const ShadowGraph& sg, const Graph& base) {
  std::vector<DistanceViolation> out;
  const DistanceTable base_t(base);
  const DistanceTable t(sg.graph());
  const std::size_t n = base.order();
  auto expect = [&](Vertex x, Vertex y, const char* which, Vertex a, Vertex b, Distance want) {
    const Distance got = t.at(a, b);
    if (got != want) out.push_back({x, y, which, want, got});
  };
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      const Vertex xs = sg.shadow_of(x), ys = sg.shadow_of(y);
      if (!base.has_edge(x, y)) {
        const Distance d = base_t.at(x, y);
        expect(x, y, "x,y", x, y, d);
        expect(x, y, "x,y'", x, ys, d);
        expect(x, y, "x',y'", xs, ys, d);
      } else {
        expect(x, y, "x,y", x, y, 1);
        expect(x, y, "x,y'", x, ys, 1);
        const bool in_triangle = (base.row(x) & base.row(y)) != 0;
        expect(x, y, "x',y'", xs, ys, in_triangle ? 2 : 3);
      }
    }
  return out;
}

// Base graph recovered from the original side of a shadow graph.
inline Graph base_graph(const ShadowGraph& sg) { return induced_subgraph(sg.graph(), sg.base_side()); }

inline std::vector<DistanceViolation> shadow_distance_check(const ShadowGraph& sg) {
  return shadow_distance_check(sg, base_graph(sg));
}

// Classification of base vertices by membership of v and v' in a set S:
//   V1: v, v' in S   V2: only v'   V3: only v   V4: neither
struct PiPartition {
  VertexSet v1, v2, v3, v4;

  std::size_t n1() const { return v1.size(); }
  std::size_t n2() const { return v2.size(); }
  std::size_t n3() const { return v3.size(); }
  std::size_t n4() const { return v4.size(); }
};

inline PiPartition pi_partition(const ShadowGraph& sg, VertexSet s) {
  const std::size_t n = sg.base_order();
  PiPartition p{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) {
    const bool base_in = s.contains(v), shadow_in = s.contains(sg.shadow_of(v));
    if (base_in && shadow_in) p.v1.insert(v);
    else if (shadow_in) p.v2.insert(v);
    else if (base_in) p.v3.insert(v);
    else p.v4.insert(v);
  }
  // |S| = n + n1 - n4
  if (s.size() + p.n4() != n + p.n1()) throw std::logic_error("pi-partition counting identity failed");
  return p;
}

// Structural clauses satisfied by the partition of any general-position
// set of S(G). Returns the labels of the clauses that fail; the set itself is
// not checked for general position here.
inline std::vector<std::string> check_gp_partition_lemma(const ShadowGraph& sg, VertexSet s) {
  const Graph base = base_graph(sg);
  const PiPartition p = pi_partition(sg, s);
  std::vector<std::string> failed;
  auto edges_between = [&](VertexSet a, VertexSet b) {
    for (Vertex u : a)
      if ((base.neighbors(u) & b).size() > 0) return true;
    return false;
  };

  if (edges_between(p.v1, p.v1)) failed.emplace_back("(i) V1 is not independent");
  if (edges_between(p.v1, p.v3)) failed.emplace_back("(ii) edges between V1 and V3");
  for (Vertex u : p.v1 | p.v3)
    if ((base.neighbors(u) & p.v2).size() > 1) {
      failed.emplace_back("(iii) vertex " + std::to_string(u) + " has two neighbours in V2");
      break;
    }
  bool matching = true;
  for (Vertex w : p.v2)
    if ((base.neighbors(w) & p.v1).size() > 1) matching = false;
  for (Vertex u : p.v1)
    if ((base.neighbors(u) & p.v2).size() > 1) matching = false;
  if (!matching) failed.emplace_back("(iv) (V1,V2) is not a matching");
  if (p.v4.empty() && !p.v1.empty()) failed.emplace_back("(v) V4 empty but V1 non-empty");
  return failed;
}

}  // namespace shadowpos
