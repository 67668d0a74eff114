#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shadowpos/graph.hpp"
#include "shadowpos/metric.hpp"

namespace shadowpos {

enum class FamilyKind {
  path,
  cycle,
  complete,
  complete_bipartite,
  complete_multipartite,
  star,
  random_tree,
  join_k1_cliques,
  balloon,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<std::size_t> params;
  std::optional<std::uint64_t> seed;
};

namespace detail {

struct FamilyName {
  FamilyKind kind;
  std::string_view canonical;
  std::string_view alias;
};

inline constexpr FamilyName kFamilyNames[] = {
    {FamilyKind::path, "path", "path"},
    {FamilyKind::cycle, "cycle", "cycle"},
    {FamilyKind::complete, "complete", "complete"},
    {FamilyKind::complete_bipartite, "bipartite", "complete_bipartite"},
    {FamilyKind::complete_multipartite, "kpartite", "complete_multipartite"},
    {FamilyKind::star, "star", "star"},
    {FamilyKind::random_tree, "tree", "random_tree"},
    {FamilyKind::join_k1_cliques, "join", "join_k1_cliques"},
    {FamilyKind::balloon, "balloon", "balloon"},
};

inline std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw ParseError(message);
}

}  // namespace detail

inline std::string_view family_name(FamilyKind kind) {
  for (const auto& entry : detail::kFamilyNames)
    if (entry.kind == kind) return entry.canonical;
  return "?";
}

inline std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.kind));
  out += ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  if (spec.seed) out += ":seed=" + std::to_string(*spec.seed);
  return out;
}

// Arity and size checks; throws ParseError naming the offending parameter.
inline void validate(const FamilySpec& spec) {
  using detail::require;
  const auto& p = spec.params;
  const std::string name(family_name(spec.kind));
  auto exactly = [&](std::size_t k) {
    require(p.size() == k, name + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(p.size()));
  };
  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::complete:
    case FamilyKind::star:
      exactly(1);
      require(p[0] >= 1, name + ": size must be >= 1");
      break;
    case FamilyKind::cycle:
      exactly(1);
      require(p[0] >= 3, "cycle: length must be >= 3");
      break;
    case FamilyKind::complete_bipartite:
      exactly(2);
      require(p[0] >= 1 && p[1] >= 1, "bipartite: part sizes must be >= 1");
      break;
    case FamilyKind::complete_multipartite:
    case FamilyKind::join_k1_cliques:
      require(!p.empty(), name + ": needs at least one part size");
      for (std::size_t i = 0; i < p.size(); ++i)
        require(p[i] >= 1, name + ": part " + std::to_string(i) + " must have size >= 1");
      break;
    case FamilyKind::random_tree:
      exactly(1);
      require(p[0] >= 2, "tree: order must be >= 2");
      break;
    case FamilyKind::balloon:
      exactly(1);
      require(p[0] >= 2, "balloon: k must be >= 2");
      break;
  }
  if (spec.seed && spec.kind != FamilyKind::random_tree) throw ParseError(name + ": seed is only valid for tree");
}

// Text form `kind:a,b,c[:seed=N]`, e.g. `cycle:8`, `kpartite:3,2,2`, `tree:9:seed=7`.
inline FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec '" + std::string(text) + "' lacks ':'");
  const std::string_view kind_text = text.substr(0, colon);
  FamilySpec spec;
  bool known = false;
  for (const auto& entry : detail::kFamilyNames)
    if (kind_text == entry.canonical || kind_text == entry.alias) {
      spec.kind = entry.kind;
      known = true;
    }
  if (!known) throw ParseError("unknown graph family '" + std::string(kind_text) + "'");

  std::string_view rest = text.substr(colon + 1);
  std::string_view param_text = rest;
  if (const auto second = rest.find(':'); second != std::string_view::npos) {
    param_text = rest.substr(0, second);
    std::string_view option = rest.substr(second + 1);
    if (!option.starts_with("seed=")) throw ParseError("unknown family option '" + std::string(option) + "'");
    const std::string_view seed_text = option.substr(5);
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), seed);
    if (ec != std::errc() || ptr != seed_text.data() + seed_text.size() || seed_text.empty())
      throw ParseError("invalid seed '" + std::string(seed_text) + "'");
    spec.seed = seed;
  }
  while (!param_text.empty()) {
    const auto comma = param_text.find(',');
    spec.params.push_back(detail::parse_count(param_text.substr(0, comma), "family parameter"));
    if (comma == std::string_view::npos) break;
    param_text.remove_prefix(comma + 1);
  }
  if (spec.kind == FamilyKind::random_tree && !spec.seed) spec.seed = 0;
  validate(spec);
  return spec;
}

// Pruefer sequence (length n-2 over [n]) to labelled tree.
inline Graph decode_pruefer(std::size_t n, const std::vector<std::size_t>& code) {
  if (n < 2 || code.size() != n - 2) throw ParseError("pruefer: sequence length must be n-2");
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) {
    if (c >= n) throw ParseError("pruefer: symbol out of range");
    ++degree[c];
  }
  std::vector<Edge> edges;
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(c));
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(static_cast<Vertex>(v));
  edges.emplace_back(last[0], last[1]);
  return build_graph(n, edges);
}

// Uniform labelled tree on n vertices: decode a random Pruefer sequence of
// length n-2 over [n]. Deterministic per (n, seed).
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw ParseError("random_tree: n must be >= 2");
  if (n > kMaxVertices) throw PreconditionError("random_tree: n exceeds the vertex limit");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = pick(rng);
  return decode_pruefer(n, code);
}

// Vertex numbering:
//   path / cycle       consecutive
//   multipartite       parts contiguous, in parameter order
//   star               centre 0, leaves 1..k
//   join               universal vertex 0, then cliques contiguous
//   balloon            hub 0, then k blocks of five cycle vertices;
//                      hub joined to the first vertex of each block
inline Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  std::vector<Edge> edges;
  auto add = [&](std::size_t u, std::size_t v) { edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v)); };
  auto parts_total = [&] { return std::accumulate(p.begin(), p.end(), std::size_t{0}); };
  std::size_t n = 0;
  switch (spec.kind) {
    case FamilyKind::path:
      n = p[0];
      for (std::size_t i = 0; i + 1 < n; ++i) add(i, i + 1);
      break;
    case FamilyKind::cycle:
      n = p[0];
      for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
      break;
    case FamilyKind::complete:
      n = p[0];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) add(i, j);
      break;
    case FamilyKind::star:
      n = p[0] + 1;
      for (std::size_t i = 1; i < n; ++i) add(0, i);
      break;
    case FamilyKind::complete_bipartite:
    case FamilyKind::complete_multipartite: {
      n = parts_total();
      if (n > kMaxVertices) throw PreconditionError("family exceeds the vertex limit");
      std::vector<std::size_t> part_of;
      for (std::size_t i = 0; i < p.size(); ++i) part_of.insert(part_of.end(), p[i], i);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (part_of[u] != part_of[v]) add(u, v);
      break;
    }
    case FamilyKind::random_tree:
      return random_tree(p[0], spec.seed.value_or(0));
    case FamilyKind::join_k1_cliques: {
      n = 1 + parts_total();
      if (n > kMaxVertices) throw PreconditionError("family exceeds the vertex limit");
      for (std::size_t v = 1; v < n; ++v) add(0, v);
      std::size_t start = 1;
      for (auto size : p) {
        for (std::size_t i = start; i < start + size; ++i)
          for (std::size_t j = i + 1; j < start + size; ++j) add(i, j);
        start += size;
      }
      break;
    }
    case FamilyKind::balloon: {
      const std::size_t k = p[0];
      n = 1 + 5 * k;
      if (n > kMaxVertices) throw PreconditionError("family exceeds the vertex limit");
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t base = 1 + 5 * b;
        for (std::size_t i = 0; i < 5; ++i) add(base + i, base + (i + 1) % 5);
        add(0, base);
      }
      break;
    }
  }
  if (n > kMaxVertices) throw PreconditionError("family exceeds the vertex limit");
  return build_graph(n, edges);
}

inline Graph generate(std::string_view text) { return generate(parse_family(text)); }

inline constexpr std::size_t kMaxEnumerationOrder = 7;

namespace detail {

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Upper-triangle bit string, pairs (0,1),(0,2),..,(0,n-1),(1,2),..; the first
// pair is the most significant bit.
inline std::uint64_t adjacency_code(const std::vector<VertexSet::Word>& rows, const std::vector<Vertex>& perm) {
  const std::size_t n = rows.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1U);
  return code;
}

inline std::vector<VertexSet::Word> rows_from_code(std::size_t n, std::uint64_t code) {
  std::vector<VertexSet::Word> rows(n, 0);
  std::size_t bit = pair_count(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      --bit;
      if ((code >> bit) & 1U) {
        rows[i] |= VertexSet::bit(static_cast<Vertex>(j));
        rows[j] |= VertexSet::bit(static_cast<Vertex>(i));
      }
    }
  return rows;
}

// Minimum adjacency code over all vertex permutations. The comparison against
// the running minimum aborts as soon as the prefix is larger.
inline std::uint64_t canonical_code(const std::vector<VertexSet::Word>& rows) {
  const std::size_t n = rows.size();
  const std::size_t bits = pair_count(n);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    std::size_t emitted = 0;
    bool worse = false;
    for (std::size_t i = 0; i < n && !worse; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1U);
        ++emitted;
        if (code > (best >> (bits - emitted))) {
          worse = true;
          break;
        }
      }
    if (!worse && code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return bits == 0 ? 0 : best;
}

// Canonical codes of all graphs (connected or not) on exactly n vertices,
// sorted. Built by one-vertex extension of the classes on n-1 vertices.
inline const std::vector<std::uint64_t>& isomorphism_classes(std::size_t n) {
  static std::recursive_mutex mutex;
  static std::map<std::size_t, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::uint64_t> classes;
  if (n <= 1) {
    classes.push_back(0);
  } else {
    const auto& smaller = isomorphism_classes(n - 1);
    std::vector<std::uint64_t> found;
    for (std::uint64_t code : smaller) {
      auto base = rows_from_code(n - 1, code);
      for (VertexSet::Word attach = 0; attach < (VertexSet::Word{1} << (n - 1)); ++attach) {
        std::vector<VertexSet::Word> rows = base;
        rows.push_back(attach);
        for (Vertex v : VertexSet(n - 1, attach)) rows[v] |= VertexSet::bit(static_cast<Vertex>(n - 1));
        found.push_back(canonical_code(rows));
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    classes = std::move(found);
  }
  return cache.emplace(n, std::move(classes)).first->second;
}

}  // namespace detail

// Every connected graph on 1..n_max vertices. Labelled mode visits each
// labelled graph once; dedup mode visits one canonical representative per
// isomorphism class. Return false from `visit` to stop early.
inline void for_each_connected(std::size_t n_max, bool dedup, const std::function<bool(const Graph&)>& visit) {
  if (n_max > kMaxEnumerationOrder)
    throw PreconditionError("enumeration is capped at n_max = " + std::to_string(kMaxEnumerationOrder));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t bits = detail::pair_count(n);
    if (dedup) {
      for (std::uint64_t code : detail::isomorphism_classes(n)) {
        Graph g = from_rows(detail::rows_from_code(n, code), {});
        if (is_connected(g) && !visit(g)) return;
      }
      continue;
    }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
      Graph g = from_rows(detail::rows_from_code(n, code), {});
      if (is_connected(g) && !visit(g)) return;
    }
  }
}

inline std::vector<Graph> enumerate_connected(std::size_t n_max, bool dedup = false) {
  std::vector<Graph> out;
  for_each_connected(n_max, dedup, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace shadowpos
