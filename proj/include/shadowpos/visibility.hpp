#pragma once

#include <array>
#include <string_view>

#include "shadowpos/graph.hpp"
#include "shadowpos/metric.hpp"

namespace shadowpos {

enum class SetProperty { GP, IGP, MV, IMV, TMV, ITMV };

inline constexpr std::array kAllSetProperties = {SetProperty::GP,  SetProperty::IGP, SetProperty::MV,
                                                 SetProperty::IMV, SetProperty::TMV, SetProperty::ITMV};

inline std::string_view to_string(SetProperty p) {
  switch (p) {
    case SetProperty::GP: return "GP";
    case SetProperty::IGP: return "IGP";
    case SetProperty::MV: return "MV";
    case SetProperty::IMV: return "IMV";
    case SetProperty::TMV: return "TMV";
    case SetProperty::ITMV: return "ITMV";
  }
  return "?";
}

inline bool requires_independence(SetProperty p) {
  return p == SetProperty::IGP || p == SetProperty::IMV || p == SetProperty::ITMV;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if ((g.row(v) & s.bits()) != 0) return false;
  return true;
}

// No member lies on a geodesic between two other members.
inline bool is_gp_set(const DistanceTable& t, VertexSet s) {
  for (Vertex u : s)
    for (Vertex v : s) {
      if (v <= u) continue;
      if ((t.interval_bits(u, v) & s.bits() & ~(VertexSet::bit(u) | VertexSet::bit(v))) != 0) return false;
    }
  return true;
}

// Every pair of members is joined by a geodesic with no internal member.
inline bool is_mv_set(const Graph& g, const DistanceTable& t, VertexSet s) {
  for (Vertex u : s)
    for (Vertex v : s)
      if (v > u && !geodesic_exists_avoiding(t, g, u, v, s)) return false;
  return true;
}

// Every pair of vertices of the whole graph is S-visible.
inline bool is_total_mv_set(const Graph& g, const DistanceTable& t, VertexSet s) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!geodesic_exists_avoiding(t, g, u, v, s)) return false;
  return true;
}

inline bool check(SetProperty property, const Graph& g, const DistanceTable& t, VertexSet s) {
  if (requires_independence(property) && !is_independent(g, s)) return false;
  switch (property) {
    case SetProperty::GP:
    case SetProperty::IGP: return is_gp_set(t, s);
    case SetProperty::MV:
    case SetProperty::IMV: return is_mv_set(g, t, s);
    case SetProperty::TMV:
    case SetProperty::ITMV: return is_total_mv_set(g, t, s);
  }
  return false;
}

}  // namespace shadowpos
