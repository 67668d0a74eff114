#pragma once

#include <random>

#include "oracle.hpp"
#include "shadowpos/shadowpos.hpp"

namespace testing {

inline oracle::Graph to_oracle(const shadowpos::Graph& g) {
  oracle::Graph o(static_cast<int>(g.order()));
  for (auto [u, v] : g.edges()) o.add(static_cast<int>(u), static_cast<int>(v));
  return o;
}

inline oracle::Kind to_oracle(shadowpos::SetProperty p) {
  using shadowpos::SetProperty;
  switch (p) {
    case SetProperty::GP: return oracle::Kind::gp;
    case SetProperty::IGP: return oracle::Kind::igp;
    case SetProperty::MV: return oracle::Kind::mv;
    case SetProperty::IMV: return oracle::Kind::imv;
    case SetProperty::TMV: return oracle::Kind::tmv;
    case SetProperty::ITMV: return oracle::Kind::itmv;
  }
  return oracle::Kind::gp;
}

// Connected G(n, p) sample, resampled until connected.
inline shadowpos::Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<shadowpos::Edge> edges;
    for (shadowpos::Vertex u = 0; u < n; ++u)
      for (shadowpos::Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    auto g = shadowpos::build_graph(n, edges);
    if (shadowpos::is_connected(g)) return g;
  }
}

}  // namespace testing
