#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "shadowpos/families.hpp"
#include "shadowpos/graph.hpp"

namespace shadowpos {

// graph6: N(n) followed by the upper triangle in column order
// x(0,1) x(0,2) x(1,2) x(0,3) .. packed six bits per byte, each byte + 63.
inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
  std::size_t pos = 0, n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("graph6: unsupported size header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw PreconditionError("graph6: order " + std::to_string(n) + " exceeds the vertex limit");
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " + std::to_string(text.size() - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  return build_graph(n, edges);
}

// Edge list: one `u v` pair per line; `#` starts a comment; blank lines are
// ignored. The directive `# vertices N` fixes the order (so isolated
// trailing vertices survive); otherwise the order is max index + 1.
inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_index = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      std::istringstream directive(line.substr(hash + 1));
      std::string word;
      std::size_t count = 0;
      if (directive >> word && word == "vertices" && directive >> count) declared = count;
      line.erase(hash);
    }
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u)) continue;
    std::string extra;
    if (!(fields >> v) || (fields >> extra) || u < 0 || v < 0)
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_index = std::max<std::size_t>(max_index, static_cast<std::size_t>(std::max(u, v)));
    any = true;
  }
  const std::size_t n = declared.value_or(any ? max_index + 1 : 0);
  return build_graph(n, edges);
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = "# vertices " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// DOT export. With base_n set, vertices >= base_n are drawn as the shadow
// side in their own rank group.
inline std::string write_dot(const Graph& g, std::optional<std::size_t> base_n = std::nullopt) {
  std::ostringstream out;
  out << "graph G {\n";
  auto node = [&](Vertex v) { out << "  " << v << " [label=\"" << g.label(v) << "\"];\n"; };
  if (base_n) {
    out << "  subgraph cluster_original {\n    label=\"original\";\n    rank=same;\n";
    for (Vertex v = 0; v < *base_n && v < g.order(); ++v) out << "  ", node(v);
    out << "  }\n  subgraph cluster_shadow {\n    label=\"shadow\";\n    rank=same;\n";
    for (Vertex v = static_cast<Vertex>(*base_n); v < std::min(g.order(), 2 * *base_n); ++v) out << "  ", node(v);
    out << "  }\n";
    for (Vertex v = static_cast<Vertex>(2 * *base_n); v < g.order(); ++v) node(v);
  } else {
    for (Vertex v = 0; v < g.order(); ++v) node(v);
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// A graph source is one of: `g6:<graph6>`, a path to a file (graph6 if the
// first content line is a single graph6 token, edge list otherwise), or a
// family spec such as `cycle:8`.
inline Graph load_graph(const std::string& source) {
  if (source.starts_with("g6:")) return from_graph6(std::string_view(source).substr(3));
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot read graph file '" + source + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::string token = line.substr(first);
      while (!token.empty() && (token.back() == '\r' || token.back() == ' ' || token.back() == '\t')) token.pop_back();
      const bool single_token = token.find_first_of(" \t") == std::string::npos;
      const bool numeric = token.find_first_not_of("0123456789") == std::string::npos;
      if (single_token && !numeric) return from_graph6(token);
      break;
    }
    return read_edge_list(text);
  }
  if (source.find(':') != std::string::npos) return generate(source);
  throw ParseError("graph source '" + source + "' is neither a file nor a family spec");
}

}  // namespace shadowpos
