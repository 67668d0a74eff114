#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace shadowpos;

TEST_CASE("vertex set basics") {
  VertexSet s(10, {1, 4, 9});
  CHECK(s.size() == 3);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(5));
  CHECK(s.to_string() == "{1,4,9}");
  CHECK(s.complement().size() == 7);
  CHECK(s.without(4).with(5).to_vector() == std::vector<Vertex>{1, 5, 9});
  CHECK(VertexSet(10, {1, 9}).is_subset_of(s));
  CHECK(VertexSet::full(64).size() == 64);
}

TEST_CASE("build_graph validates its input") {
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), ParseError);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), ParseError);
  CHECK_THROWS_AS(build_graph(65, {}), PreconditionError);
  const auto g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("induced subgraph keeps order of survivors") {
  const auto c6 = generate("cycle:6");
  const auto p = induced_subgraph(c6, VertexSet(6, {0, 1, 2, 5}));
  CHECK(p.order() == 4);
  CHECK(p.size() == 3);
  CHECK(p.label(3) == "5");
}

TEST_CASE("distances on C_6") {
  const auto c6 = generate("cycle:6");
  const DistanceTable t(c6);
  CHECK(t.at(0, 3) == 3);
  CHECK(t.at(0, 2) == 2);
  CHECK(t.diameter() == 3);
  CHECK(in_interval(t, 0, 3, 1));
  CHECK(in_interval(t, 0, 3, 5));
  CHECK_FALSE(in_interval(t, 0, 2, 4));
  CHECK(t.interval(0, 3).size() == 6);
  CHECK(t.sphere_bits(0, 2) == (VertexSet::bit(2) | VertexSet::bit(4)));
}

TEST_CASE("geodesic avoiding a forbidden set") {
  const auto c6 = generate("cycle:6");
  const DistanceTable t(c6);
  CHECK_FALSE(geodesic_exists_avoiding(t, c6, 0, 3, VertexSet(6, {1, 5})));
  CHECK(geodesic_exists_avoiding(t, c6, 0, 3, VertexSet(6, {1})));
  // endpoints themselves are never forbidden
  CHECK(geodesic_exists_avoiding(t, c6, 0, 3, VertexSet(6, {0, 3})));
}

TEST_CASE("disconnected distances are unreachable") {
  const auto g = build_graph(4, {{0, 1}, {2, 3}});
  const DistanceTable t(g);
  CHECK_FALSE(t.finite(0, 2));
  CHECK_FALSE(t.connected());
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(build_graph(1, {})));
}

TEST_CASE("structural summary") {
  const auto s = structural_queries(generate("star:4"));
  CHECK(s.connected);
  CHECK(s.diameter == 2);
  CHECK(s.leaves.size() == 4);
  CHECK(s.max_degree == 4);
  CHECK(s.min_degree == 1);
  CHECK(s.has_universal_vertex);
  CHECK(s.is_triangle_free);
  CHECK_FALSE(s.is_regular);
  const auto c5 = structural_queries(generate("cycle:5"));
  CHECK(c5.is_regular);
  CHECK(c5.is_triangle_free);
  CHECK_FALSE(c5.has_universal_vertex);
  CHECK_FALSE(structural_queries(generate("complete:3")).is_triangle_free);
}

TEST_CASE("distances agree with Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const auto g = testing::random_connected(9, 0.3, rng);
    const DistanceTable t(g);
    const auto d = oracle::floyd(testing::to_oracle(g));
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = 0; v < 9; ++v) REQUIRE(static_cast<int>(t.at(u, v)) == d[u][v]);
  }
}
