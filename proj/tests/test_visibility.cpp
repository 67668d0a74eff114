#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace shadowpos;

TEST_CASE("general position predicate") {
  const auto sk4 = shadow(generate("complete:4"));
  const DistanceTable t(sk4.graph());
  CHECK(is_gp_set(t, sk4.shadow_side()));
  const auto c8 = generate("cycle:8");
  const DistanceTable t8(c8);
  CHECK_FALSE(is_gp_set(t8, VertexSet(8, {0, 1, 2})));
  CHECK(is_gp_set(t8, VertexSet(8, {0, 4})));
  CHECK(is_gp_set(t8, VertexSet(8)));
}

TEST_CASE("mutual visibility predicate") {
  const auto k22 = shadow(generate("bipartite:2,2"));
  const DistanceTable t(k22.graph());
  // vertices 0 and 2 lie in different parts
  CHECK(is_mv_set(k22.graph(), t, VertexSet::full(8).without(0).without(2)));
  const auto p3 = generate("path:3");
  const DistanceTable t3(p3);
  CHECK_FALSE(is_mv_set(p3, t3, VertexSet::full(3)));
  CHECK(check(SetProperty::IMV, p3, t3, VertexSet(3, {0, 2})));
}

TEST_CASE("total mutual visibility predicate") {
  const auto c5 = generate("cycle:5");
  const DistanceTable t5(c5);
  CHECK(is_total_mv_set(c5, t5, VertexSet(5)));
  for (Vertex x = 0; x < 5; ++x) CHECK_FALSE(is_total_mv_set(c5, t5, VertexSet(5, {x})));
  const auto k5 = generate("complete:5");
  CHECK(is_total_mv_set(k5, distances(k5), VertexSet::full(5)));
}

TEST_CASE("independence and dispatch") {
  const auto k32 = generate("bipartite:3,2");
  const DistanceTable t(k32);
  CHECK(is_independent(k32, VertexSet(5, {0, 1, 2})));
  CHECK_FALSE(is_independent(k32, VertexSet(5, {0, 3})));
  CHECK(is_independent(k32, VertexSet(5)));
  CHECK(check(SetProperty::IGP, k32, t, VertexSet(5, {0, 1, 2})));
  CHECK(check(SetProperty::ITMV, k32, t, VertexSet(5)));
  CHECK_FALSE(check(SetProperty::IGP, k32, t, VertexSet(5, {0, 3})));
}

TEST_CASE("predicates agree with explicit geodesic enumeration") {
  for (const auto& g : enumerate_connected(6, true)) {
    const DistanceTable t(g);
    const auto o = testing::to_oracle(g);
    const oracle::Metric m(o);
    for (VertexSet::Word bits = 0; bits < (VertexSet::Word{1} << g.order()); ++bits) {
      const VertexSet s(g.order(), bits);
      for (auto p : kAllSetProperties) REQUIRE(check(p, g, t, s) == oracle::satisfies(testing::to_oracle(p), m, bits));
    }
  }
}

TEST_CASE("in_interval and geodesic avoidance agree with explicit geodesics") {
  for (const auto& g : enumerate_connected(7, true)) {
    const DistanceTable t(g);
    const auto o = testing::to_oracle(g);
    const oracle::Metric m(o);
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        VertexSet::Word on_some = 0;
        for (const auto& p : m.paths[u][v])
          for (int w : p) on_some |= VertexSet::bit(static_cast<Vertex>(w));
        for (Vertex w = 0; w < n; ++w) REQUIRE(in_interval(t, u, v, w) == ((on_some >> w) & 1));
        REQUIRE(geodesic_exists_avoiding(t, g, u, v, VertexSet(n)));
      }
  }
}
