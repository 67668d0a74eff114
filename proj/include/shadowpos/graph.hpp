#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shadowpos/error.hpp"
#include "shadowpos/vertex_set.hpp"

namespace shadowpos {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 with one bit row per
// vertex. Rows are symmetric and loop-free.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const {
    std::size_t total = 0;
    for (auto row : rows_) total += static_cast<std::size_t>(std::popcount(row));
    return total / 2;
  }

  VertexSet neighbors(Vertex v) const { return VertexSet(order(), rows_[v]); }
  VertexSet::Word row(Vertex v) const { return rows_[v]; }
  std::span<const VertexSet::Word> rows() const { return rows_; }
  std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }
  bool has_edge(Vertex u, Vertex v) const { return ((rows_[u] >> v) & 1U) != 0; }
  VertexSet vertices() const { return VertexSet::full(order()); }

  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : VertexSet(order(), rows_[u] & ~VertexSet::full_mask(u + 1))) out.emplace_back(u, v);
    return out;
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Graph& o) const { return rows_ == o.rows_; }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels);
  friend Graph from_rows(std::vector<VertexSet::Word> rows, std::vector<std::string> labels);

 private:
  std::vector<VertexSet::Word> rows_;
  std::vector<std::string> labels_;
};

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

inline Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n > kMaxVertices)
    throw PreconditionError("graph order " + std::to_string(n) + " exceeds the " +
                            std::to_string(kMaxVertices) + "-vertex limit");
  if (labels.size() != n) throw ParseError("label count does not match vertex count");
  Graph g;
  g.rows_.assign(n, 0);
  for (auto [u, v] : edges) {
    const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u >= n || v >= n) throw ParseError("edge " + pair + " has an endpoint outside 0.." + std::to_string(n) + "-1");
    if (u == v) throw ParseError("edge " + pair + " is a loop");
    g.rows_[u] |= VertexSet::bit(v);
    g.rows_[v] |= VertexSet::bit(u);
  }
  g.labels_ = std::move(labels);
  return g;
}

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return build_graph(n, edges, default_labels(n));
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Rows must already be symmetric and loop-free; checked.
inline Graph from_rows(std::vector<VertexSet::Word> rows, std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n > kMaxVertices) throw PreconditionError("graph order exceeds the vertex limit");
  for (Vertex u = 0; u < n; ++u) {
    if ((rows[u] & ~VertexSet::full_mask(n)) != 0) throw ParseError("adjacency row out of range");
    if ((rows[u] >> u) & 1U) throw ParseError("loop at vertex " + std::to_string(u));
    for (Vertex v : VertexSet(n, rows[u]))
      if (((rows[v] >> u) & 1U) == 0) throw ParseError("asymmetric adjacency");
  }
  if (labels.empty()) labels = default_labels(n);
  Graph g;
  g.rows_ = std::move(rows);
  g.labels_ = std::move(labels);
  return g;
}

inline Graph with_labels(const Graph& g, std::vector<std::string> labels) {
  return from_rows({g.rows().begin(), g.rows().end()}, std::move(labels));
}

// Induced subgraph on `keep`, renumbered in ascending order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<Vertex> index(g.order(), 0);
  std::vector<Vertex> members = keep.to_vector();
  for (Vertex i = 0; i < members.size(); ++i) index[members[i]] = i;
  std::vector<VertexSet::Word> rows(members.size(), 0);
  std::vector<std::string> labels;
  for (Vertex i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbors(members[i]) & keep) rows[i] |= VertexSet::bit(index[w]);
    labels.push_back(g.label(members[i]));
  }
  return from_rows(std::move(rows), std::move(labels));
}

}  // namespace shadowpos
