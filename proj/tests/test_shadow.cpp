#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace shadowpos;

TEST_CASE("shadow of C_5") {
  const auto sg = shadow(generate("cycle:5"));
  CHECK(sg.graph().order() == 10);
  CHECK(sg.graph().size() == 15);
  CHECK(sg.base_order() == 5);
  CHECK(sg.twin(2) == 7);
  CHECK(sg.twin(7) == 2);
  CHECK(is_independent(sg.graph(), sg.shadow_side()));
  CHECK(sg.graph().has_edge(0, 6));
  CHECK_FALSE(sg.graph().has_edge(0, 5));
  CHECK_FALSE(sg.graph().has_edge(5, 6));
}

TEST_CASE("shadow of P_2 is P_4") {
  const auto s = shadow(generate("path:2")).graph();
  CHECK(s.size() == 3);
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < 4; ++v) degrees.push_back(s.degree(v));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(is_connected(s));
}

TEST_CASE("shadow matches the definition on random graphs") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 40; ++round) {
    const auto g = testing::random_connected(7, 0.35, rng);
    const auto sg = shadow(g);
    const auto o = oracle::shadow(testing::to_oracle(g));
    CHECK(sg.graph().size() == 3 * g.size());
    for (Vertex u = 0; u < 14; ++u)
      for (Vertex v = 0; v < 14; ++v) REQUIRE(sg.graph().has_edge(u, v) == o.adj[u][v]);
  }
}

TEST_CASE("shadow rejects a disconnected graph") {
  CHECK_THROWS_AS(shadow(build_graph(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("star shadow") {
  const auto g = star_shadow(generate("cycle:5"));
  CHECK(g.order() == 11);
  CHECK(g.size() == 20);
  CHECK(g.degree(10) == 5);
  CHECK(clique_number(g) == 2);
  CHECK(structural_queries(g).is_triangle_free);
  const auto p = star_shadow(generate("path:2"));
  CHECK(p.order() == 5);
  CHECK(p.size() == 5);
  CHECK(star_shadow(generate("complete:1")).order() == 3);
  CHECK(iterate_star_shadow(generate("path:2"), 2).order() == 11);
}

TEST_CASE("distance clauses on hand-checked shadows") {
  const auto k3 = shadow(generate("complete:3"));
  CHECK(shadow_distance_check(k3).empty());
  const DistanceTable t3(k3.graph());
  CHECK(t3.at(k3.twin(0), k3.twin(1)) == 2);
  const auto c5 = shadow(generate("cycle:5"));
  CHECK(shadow_distance_check(c5).empty());
  const DistanceTable t5(c5.graph());
  CHECK(t5.at(c5.twin(0), c5.twin(1)) == 3);
  const auto p4 = shadow(generate("path:4"));
  const DistanceTable t4(p4.graph());
  CHECK(t4.at(p4.twin(0), p4.twin(3)) == 3);
  CHECK(shadow_distance_check(p4).empty());
}

TEST_CASE("distance check flags a graph that is not a shadow") {
  // C_4 read as a "shadow" of P_2 breaks the adjacent-pair clauses
  const ShadowGraph fake(generate("cycle:4"), 2);
  CHECK_FALSE(shadow_distance_check(fake).empty());
}

TEST_CASE("pi partition") {
  const auto sg = shadow(generate("cycle:6"));
  const auto all_shadows = pi_partition(sg, sg.shadow_side());
  CHECK(all_shadows.n2() == 6);
  CHECK(all_shadows.n1() + all_shadows.n3() + all_shadows.n4() == 0);
  CHECK(pi_partition(sg, VertexSet(12)).n4() == 6);
  const auto full = pi_partition(sg, VertexSet::full(12));
  CHECK(full.n1() == 6);
  const auto mixed = pi_partition(sg, VertexSet(12, {0, 6, 1, 8}));
  CHECK(mixed.v1 == VertexSet(6, {0}));
  CHECK(mixed.v2 == VertexSet(6, {2}));
  CHECK(mixed.v3 == VertexSet(6, {1}));
  CHECK(mixed.n4() == 3);
}

TEST_CASE("partition lemma clauses") {
  const auto c8 = shadow(generate("cycle:8"));
  const auto report = max_set(SetProperty::GP, c8.graph());
  REQUIRE(report.witness);
  CHECK(check_gp_partition_lemma(c8, *report.witness).empty());
  CHECK(check_gp_partition_lemma(c8, VertexSet(16)).empty());
  // {v, v', u, u'} for the edge uv = 01 of C_4: V1 = {0,1} is not independent
  const auto c4 = shadow(generate("cycle:4"));
  const auto bad = check_gp_partition_lemma(c4, VertexSet(8, {0, 4, 1, 5}));
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().starts_with("(i)"));
}
