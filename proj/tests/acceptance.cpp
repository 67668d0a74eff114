// Acceptance criteria. `acceptance <name>` runs one criterion, `acceptance
// all` runs every one. Each prints a single PASS/FAIL line; all values are
// integers compared exactly, and each criterion has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "shadowpos/shadowpos.hpp"

using namespace shadowpos;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string first_failures(const SuiteReport& r, std::size_t limit = 3) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& rec : r.instances) {
    if (rec.status == InstanceStatus::pass) continue;
    if (shown++ == limit) {
      out += " ...";
      break;
    }
    out += " | " + std::string(to_string(rec.status)) + " " + rec.key + " g6=" + rec.graph + " " + rec.detail;
  }
  return out;
}

// Every instance must PASS; a SKIPPED instance fails the criterion as well.
Outcome suites(const std::vector<std::pair<std::string, SuiteParams>>& runs) {
  Outcome o;
  std::ostringstream text;
  for (const auto& [id, params] : runs) {
    const auto r = run_suite(id, params);
    const bool ok = r.failed() == 0 && r.skipped() == 0 && !r.instances.empty();
    o.pass = o.pass && ok;
    text << id << " " << r.passed() << "/" << r.instances.size();
    if (!ok) text << " (fail " << r.failed() << ", skipped " << r.skipped() << ")" << first_failures(r);
    text << "; ";
  }
  o.detail = text.str();
  return o;
}

SuiteParams with_n(std::size_t n) {
  SuiteParams p;
  p.n_max = n;
  return p;
}

oracle::Graph to_oracle(const Graph& g) {
  oracle::Graph o(static_cast<int>(g.order()));
  for (auto [u, v] : g.edges()) o.add(static_cast<int>(u), static_cast<int>(v));
  return o;
}

oracle::Kind to_oracle(SetProperty p) { return static_cast<oracle::Kind>(static_cast<int>(p)); }

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t graphs = 0, comparisons = 0;
  for (const auto& g : enumerate_connected(5, false)) {
    std::vector<Graph> subjects{g};
    if (g.order() >= 2) subjects.push_back(shadow(g).graph());
    ++graphs;
    for (const auto& h : subjects)
      for (auto p : kAllSetProperties) {
        const auto r = max_set(p, h);
        const int want = oracle::maximum(to_oracle(p), to_oracle(h));
        ++comparisons;
        if (!r.exact || static_cast<int>(r.value) != want) {
          o.pass = false;
          o.detail = "g6=" + to_graph6(h) + " " + std::string(to_string(p)) + ": solver " + std::to_string(r.value) +
                     ", oracle " + std::to_string(want);
          return o;
        }
      }
  }
  o.detail = std::to_string(graphs) + " labelled graphs, " + std::to_string(comparisons) + " values equal";
  return o;
}

Outcome heredity() {
  constexpr int kPairs = 10000;
  std::mt19937_64 rng(20240601);
  Outcome o;
  std::ostringstream text;
  for (auto p : kAllSetProperties) {
    int checked = 0, nontrivial = 0;
    while (checked < kPairs) {
      const std::size_t n = 2 + rng() % 7;
      std::bernoulli_distribution coin(0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      const auto g = build_graph(n, edges);
      if (!is_connected(g)) continue;
      const DistanceTable t(g);
      // random maximal set with the property, then random subsets of it
      std::vector<Vertex> order(n);
      for (Vertex v = 0; v < n; ++v) order[v] = v;
      std::shuffle(order.begin(), order.end(), rng);
      VertexSet s(n);
      for (Vertex v : order)
        if (check(p, g, t, s.with(v))) s.insert(v);
      for (int k = 0; k < 20 && checked < kPairs; ++k, ++checked) {
        const VertexSet sub(n, s.bits() & rng());
        if (sub.size() >= 2) ++nontrivial;
        if (!check(p, g, t, sub)) {
          o.pass = false;
          text << to_string(p) << " violated on g6=" << to_graph6(g) << " S=" << s.to_string() << " sub=" << sub.to_string()
               << "; ";
        }
      }
    }
    text << to_string(p) << " " << checked << " pairs (" << nontrivial << " with |sub| >= 2); ";
  }
  o.detail = text.str();
  return o;
}

Outcome star_shadow_c5() {
  const auto g = star_shadow(generate("cycle:5"));
  const auto chi = chromatic_number(g);
  const bool tf = structural_queries(g).is_triangle_free;
  Outcome o;
  o.pass = chi.exact && chi.value == 4 && tf && g.order() == 11 && g.size() == 20;
  o.detail = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + " chi=" + std::to_string(chi.value) +
             " triangle-free=" + (tf ? "yes" : "no");
  return o;
}

std::vector<Criterion> criteria() {
  SuiteParams trees_gp = with_n(9), trees_mu = with_n(9);
  trees_gp.trees = trees_mu.trees = 50;
  SuiteParams balloon;
  balloon.balloon_k = 2;
  balloon.heuristic_seconds = 60;
  return {
      {"gp-complete", 5, [] { return suites({{"gp-complete", with_n(8)}}); }},
      {"gp-bipartite", 30, [] { return suites({{"gp-bipartite", with_n(5)}}); }},
      {"gp-cycles", 60, [] { return suites({{"gp-cycles", with_n(10)}}); }},
      {"mu-cycles", 180, [] { return suites({{"mu-cycles", with_n(9)}}); }},
      {"trees", 180, [=] { return suites({{"gp-trees", trees_gp}, {"mu-trees", trees_mu}}); }},
      {"mu-multipartite", 120, [] { return suites({{"mu-multipartite", with_n(7)}}); }},
      {"gp-join", 120, [] { return suites({{"gp-join", with_n(9)}}); }},
      {"mu-char", 300, [] { return suites({{"mu-char", with_n(6)}}); }},
      {"bound-fuzz", 300,
       [] {
         return suites({{"mu-bounds", with_n(6)},
                        {"gp-sandwich", with_n(6)},
                        {"mu-leaf", with_n(6)},
                        {"mu-muit", with_n(6)},
                        {"gp-diam3", with_n(6)},
                        {"gp-regular-tf", with_n(6)},
                        {"ip-ic-bounds", with_n(6)}});
       }},
      {"lemmas", 300, [] { return suites({{"lemma-distance", with_n(7)}, {"lemma-partition", with_n(6)}}); }},
      {"star-shadow-c5", 1, star_shadow_c5},
      {"balloon", 70, [=] { return suites({{"mu-balloon", balloon}}); }},
      {"oracle-equivalence", 300, oracle_equivalence},
      {"heredity", 120, heredity},
  };
}

bool run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= c.limit_seconds;
  const bool pass = o.pass && in_time;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / limit %.0fs", secs, c.limit_seconds);
  std::cout << (pass ? "PASS " : "FAIL ") << c.name << " [" << timing << (in_time ? "" : ", over limit") << "] "
            << o.detail << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  bool ok = true, found = false;
  for (const auto& c : criteria()) {
    if (which != "all" && which != c.name) continue;
    found = true;
    ok = run(c) && ok;
  }
  if (!found) {
    std::cerr << "unknown criterion '" << which << "'\n";
    return 2;
  }
  return ok ? 0 : 1;
}
