#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace shadowpos;

TEST_CASE("closed forms at stated values") {
  using namespace expected;
  CHECK(gp_shadow_complete(5) == 5);
  CHECK(gp_shadow_bipartite(3, 2) == 6);
  CHECK(gp_shadow_bipartite(2, 3) == 6);
  CHECK(gp_shadow_join({2, 2, 3}) == 9);
  CHECK(gp_shadow_join({2, 2}) == 6);
  CHECK(gp_shadow_lower(3) == 6);
  CHECK(gp_shadow_upper(5, 2, 2) == 5 + std::min(1LL, floor_div(6, 4)));
  CHECK(gp_shadow_upper(4, 1, 3) == 3);
  CHECK(floor_div(-1, 4) == -1);
  CHECK(floor_div(7, 2) == 3);
  for (std::size_t n = 3; n <= 7; ++n) CHECK(gp_shadow_cycle(n) == n);
  for (std::size_t n = 8; n <= 10; ++n) CHECK(gp_shadow_cycle(n) == 6);
  CHECK(gp_shadow_tree(4) == 8);
  CHECK(mu_shadow_lower(5, 3, 2) == 6);
  CHECK(mu_shadow_upper(5, 2) == 7);
  CHECK(mu_shadow_upper(5, 4) == 8);
  CHECK(mu_shadow_multipartite(6) == 10);
  CHECK(mu_shadow_leaf_lower(6, 2) == 8);
  CHECK(mu_shadow_muit_lower(6, 1) == 7);
  CHECK(mu_shadow_tree(7, 3) == 10);
  CHECK(mu_shadow_balloon_lower(2) == 13);
  CHECK(mu_shadow_cycle(3) == 4);
  CHECK(mu_shadow_cycle(4) == 6);
  CHECK(mu_shadow_cycle(5) == 6);
  CHECK(mu_shadow_cycle(6) == 7);
  CHECK(mu_shadow_cycle(7) == 7);
  CHECK(mu_shadow_cycle(9) == 9);
}

TEST_CASE("part multisets") {
  const auto parts = detail::part_multisets(2, 6, 2);
  const std::vector<std::vector<std::size_t>> want = {{2, 2}, {2, 2, 2}, {3, 2}, {3, 3}, {4, 2}};
  CHECK(parts == want);
}

TEST_CASE("suite catalog and unknown ids") {
  CHECK(suite_catalog().size() == 19);
  CHECK_THROWS_AS(run_suite("no-such-suite"), ParseError);
  try {
    run_suite("nope");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("gp-cycles") != std::string::npos);
  }
}

TEST_CASE("gp-cycles suite passes") {
  const auto r = run_suite("gp-cycles");
  CHECK(r.instances.size() == 8);
  CHECK(r.passed() == 8);
}

TEST_CASE("gp-complete from n = 2") {
  SuiteParams p;
  p.n_max = 2;
  const auto r = run_suite("gp-complete", p);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].value == 2);
  CHECK(r.instances[0].status == InstanceStatus::pass);
}

TEST_CASE("mu-char holds up to n = 6") {
  const auto r = run_suite("mu-char");
  CHECK(r.failed() == 0);
  CHECK(r.skipped() == 0);
  CHECK(r.instances.size() == 1 + 2 + 6 + 21 + 112);
}

TEST_CASE("suites are deterministic") {
  SuiteParams p;
  p.n_max = 5;
  const auto a = run_suite("mu-bounds", p);
  const auto b = run_suite("mu-bounds", p);
  REQUIRE(a.instances.size() == b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i) {
    CHECK(a.instances[i].key == b.instances[i].key);
    CHECK(a.instances[i].value == b.instances[i].value);
  }
  p.trees = 10;
  const auto t1 = run_suite("gp-trees", p), t2 = run_suite("gp-trees", p);
  for (std::size_t i = 0; i < t1.instances.size(); ++i) CHECK(t1.instances[i].family == t2.instances[i].family);
}

TEST_CASE("labelled and unlabelled enumeration agree on a fuzz suite") {
  SuiteParams p;
  p.n_max = 4;
  const auto dedup = run_suite("mu-bounds", p);
  p.dedup = false;
  const auto labelled = run_suite("mu-bounds", p);
  CHECK(dedup.failed() == 0);
  CHECK(labelled.failed() == 0);
  CHECK(labelled.instances.size() == 1 + 4 + 38);
}

TEST_CASE("budget exhaustion is reported as skipped") {
  SuiteParams p;
  p.n_max = 8;
  p.search.node_budget = 3;
  const auto r = run_suite("mu-cycles", p);
  CHECK(r.skipped() > 0);
  CHECK(r.passed() + r.failed() + r.skipped() == r.instances.size());
  for (const auto& rec : r.instances)
    if (rec.status == InstanceStatus::skipped) CHECK_FALSE(rec.exact);
}

TEST_CASE("fuzz on K_1 alone") {
  std::vector<FuzzRecord> records;
  fuzz(1, {kAllSetProperties.begin(), kAllSetProperties.end()}, 1, [&](const FuzzRecord& r) { records.push_back(r); });
  REQUIRE(records.size() == 1);
  CHECK(records[0].graph == "@");
  CHECK(records[0].violations.empty());
}

TEST_CASE("fuzz restricted to mutual visibility gives mu(S(G)) >= n") {
  std::size_t count = 0;
  fuzz(5, {SetProperty::MV}, 3, [&](const FuzzRecord& r) {
    ++count;
    if (r.n >= 2) REQUIRE(r.values.at("S:mu") >= r.n);
    for (const auto& v : r.violations) CHECK_FALSE(v.starts_with("mu-bounds"));
  });
  CHECK(count == 1 + 1 + 2 + 6 + 21);
}

TEST_CASE("fuzz up to n = 4 flags only the known counterexamples") {
  // gp(S(K_4)) = 4 exceeds the sandwich upper bound; stars K_{1,2}, K_{1,3}
  // fall short of n + l(G). Nothing else may fire.
  std::set<std::string> flagged;
  fuzz(4, {kAllSetProperties.begin(), kAllSetProperties.end()}, 1, [&](const FuzzRecord& r) {
    for (const auto& v : r.violations) flagged.insert(r.graph + " " + v.substr(0, v.find(':')));
  });
  const std::set<std::string> want = {"C~ gp-sandwich/gp(S(G)) <= n + min{..}", "BW mu-leaf/mu(S(G)) >= n + l(G)",
                                      "CF mu-leaf/mu(S(G)) >= n + l(G)"};
  CHECK(flagged == want);
}

TEST_CASE("fuzz rejects orders above the cap") {
  CHECK_THROWS_AS(fuzz(8, {}, 0, [](const FuzzRecord&) {}), PreconditionError);
}
