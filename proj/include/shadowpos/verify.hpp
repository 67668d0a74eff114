#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shadowpos/covers.hpp"
#include "shadowpos/families.hpp"
#include "shadowpos/graph_io.hpp"
#include "shadowpos/parallel.hpp"
#include "shadowpos/shadow.hpp"
#include "shadowpos/solvers.hpp"
#include "shadowpos/visibility.hpp"

namespace shadowpos {

// Closed forms and bounds replayed by the suites. Pure integer functions.
namespace expected {

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::size_t gp_shadow_complete(std::size_t n) { return n; }
inline std::size_t gp_shadow_bipartite(std::size_t m, std::size_t n) { return 2 * std::max(m, n); }

// K_1 joined with cliques of the given orders: n + t_1 - 1 where t_1 counts
// cliques of order exactly two.
inline std::size_t gp_shadow_join(const std::vector<std::size_t>& cliques) {
  std::size_t n = 1, t1 = 0;
  for (auto c : cliques) {
    n += c;
    if (c == 2) ++t1;
  }
  return n + t1 - 1;
}

inline std::size_t gp_shadow_lower(std::size_t igp) { return 2 * igp; }

// n + min{igp - delta + 1, floor((igp (n-1) - delta) / (igp + delta))}
inline long long gp_shadow_upper(std::size_t n, std::size_t igp, std::size_t delta) {
  const auto N = static_cast<long long>(n), I = static_cast<long long>(igp), D = static_cast<long long>(delta);
  return N + std::min(I - D + 1, floor_div(I * (N - 1) - D, I + D));
}

inline std::size_t gp_shadow_cycle(std::size_t n) { return n <= 7 ? n : 6; }
inline std::size_t gp_shadow_tree(std::size_t leaves) { return 2 * leaves; }

inline std::size_t mu_shadow_lower(std::size_t n, std::size_t mu_i, std::size_t max_degree) {
  return std::max({n, 2 * mu_i, 2 * max_degree});
}
inline std::size_t mu_shadow_upper(std::size_t n, std::size_t mu) { return std::min(n + mu, 2 * n - 2); }
inline std::size_t mu_shadow_multipartite(std::size_t n) { return 2 * n - 2; }
inline std::size_t mu_shadow_leaf_lower(std::size_t n, std::size_t leaves) { return n + leaves; }
inline std::size_t mu_shadow_muit_lower(std::size_t n, std::size_t mu_it) { return n + mu_it; }
inline std::size_t mu_shadow_tree(std::size_t n, std::size_t leaves) { return n + leaves; }
inline std::size_t mu_shadow_balloon_lower(std::size_t k) { return 6 * k + 1; }

inline std::size_t mu_shadow_cycle(std::size_t n) {
  if (n == 4) return 6;
  if (n == 3 || n == 5 || n == 6) return n + 1;
  return n;
}

}  // namespace expected

enum class InstanceStatus { pass, fail, skipped };

inline std::string_view to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::pass: return "PASS";
    case InstanceStatus::fail: return "FAIL";
    case InstanceStatus::skipped: return "SKIPPED";
  }
  return "?";
}

struct InstanceRecord {
  std::string key;     // sort key, unique within a suite
  std::string graph;   // graph6 of the instance graph G
  std::string family;  // family spec when the instance comes from one
  Invariant invariant = Invariant::gp;
  std::size_t value = 0;
  bool exact = true;
  std::vector<Vertex> witness;  // on S(G) when the suite is about shadows
  bool witness_on_shadow = false;
  InstanceStatus status = InstanceStatus::pass;
  std::string detail;
  double elapsed_ms = 0;
};

struct SuiteReport {
  std::string id;
  std::string claim;
  std::vector<InstanceRecord> instances;
  std::size_t excluded = 0;  // generated but filtered out by the claim's hypotheses
  std::vector<std::string> notes;

  std::size_t count(InstanceStatus s) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [&](const InstanceRecord& r) { return r.status == s; }));
  }
  std::size_t passed() const { return count(InstanceStatus::pass); }
  std::size_t failed() const { return count(InstanceStatus::fail); }
  std::size_t skipped() const { return count(InstanceStatus::skipped); }
};

struct SuiteParams {
  std::optional<std::size_t> n_max;
  std::uint64_t seed = 1;
  std::size_t trees = 50;
  std::size_t balloon_k = 2;
  double heuristic_seconds = 60.0;
  bool dedup = true;  // fuzz suites: one graph per isomorphism class
  SearchOptions search{};
};

struct SuiteInfo {
  std::string_view id;
  std::string_view claim;
  std::size_t default_n_max;
};

inline const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"gp-complete", "gp(S(K_n)) = n", 8},
      {"gp-bipartite", "gp(S(K_{m,n})) = 2m for 2 <= n <= m", 5},
      {"gp-diam3", "diam(G) <= 3 implies gp(S(G)) >= n", 6},
      {"gp-join", "gp(S(K_1 + W_1..W_t)) = n + t_1 - 1", 9},
      {"gp-sandwich", "2 igp(G) <= gp(S(G)) <= n + min{igp-delta+1, floor((igp(n-1)-delta)/(igp+delta))}", 6},
      {"gp-regular-tf", "G regular and triangle-free implies gp(S(G)) <= n", 7},
      {"gp-cycles", "gp(S(C_n)) = n for n <= 7, 6 otherwise", 10},
      {"gp-trees", "gp(S(T)) = 2 l(T) for diam(T) >= 2; also ip(S(T)) <= l(T)", 10},
      {"mu-bounds", "max{n, 2 mu_i, 2 Delta} <= mu(S(G)) <= min{n + mu, 2n - 2}", 6},
      {"mu-multipartite", "mu(S(K_{n_1..n_k})) = 2n - 2 for parts >= 2", 8},
      {"mu-leaf", "mu(S(G)) >= n + l(G) for n >= 3", 6},
      {"mu-muit", "G triangle-free without universal vertex implies mu(S(G)) >= n + mu_it(G)", 6},
      {"mu-trees", "mu(S(T)) = n(T) + l(T) for diam(T) >= 3", 9},
      {"mu-balloon", "mu_t(G_k) = 0 and mu(S(G_k)) >= 6k + 1", 0},
      {"mu-char", "mu(S(G)) = 2 iff G = P_2; = 4 iff G in {P_3, C_3}; never 3 or 5", 6},
      {"mu-cycles", "mu(S(C_n)) = 6 (n=4), n+1 (n in {3,5,6}), n (n >= 7)", 9},
      {"lemma-distance", "distances in S(G) follow the adjacency/triangle rules", 7},
      {"lemma-partition", "pi-partition clauses (i)-(v) hold for gp-sets of S(G)", 6},
      {"ip-ic-bounds", "gp(G) <= 2 ip(G) and gp(G) <= 3 ic(G)", 7},
  };
  return catalog;
}

namespace detail {

inline std::string pad(std::size_t v, std::size_t width = 3) {
  std::string s = std::to_string(v);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

struct Solved {
  std::size_t value = 0;
  bool exact = true;
  VertexSet witness;
};

// A graph G together with lazily solved invariants of G and S(G).
class Subject {
 public:
  Subject(Graph g, const SearchOptions& options) : g_(std::move(g)), t_(g_), info_(structural_queries(g_, t_)), options_(options) {}

  const Graph& graph() const { return g_; }
  const DistanceTable& table() const { return t_; }
  const StructuralSummary& info() const { return info_; }
  std::size_t n() const { return g_.order(); }
  std::size_t leaves() const { return info_.leaves.size(); }

  const ShadowGraph& shadow_graph() {
    if (!sg_) {
      sg_ = shadow(g_);
      st_ = DistanceTable(sg_->graph());
    }
    return *sg_;
  }
  const DistanceTable& shadow_table() {
    shadow_graph();
    return *st_;
  }

  const Solved& base(SetProperty p) { return solve(base_, p, g_, t_); }
  const Solved& on_shadow(SetProperty p) {
    shadow_graph();
    return solve(shadow_, p, sg_->graph(), *st_);
  }

  const InvariantReport& ip() {
    if (!ip_) ip_ = isometric_path_cover(g_, t_);
    return *ip_;
  }
  const InvariantReport& ic() {
    if (!ic_) ic_ = isometric_cycle_cover(g_, t_);
    return *ic_;
  }
  const InvariantReport& shadow_ip() {
    if (!sip_) sip_ = isometric_path_cover(shadow_graph().graph(), shadow_table());
    return *sip_;
  }

  // Set once any consulted value came from a budget-limited search.
  bool inexact = false;
  std::map<std::string, std::size_t> values;  // consulted invariants, for records

 private:
  const Solved& solve(std::map<SetProperty, Solved>& cache, SetProperty p, const Graph& g, const DistanceTable& t) {
    auto it = cache.find(p);
    if (it == cache.end()) {
      const auto r = max_set(p, g, t, options_);
      it = cache.emplace(p, Solved{r.value, r.exact, *r.witness}).first;
    }
    if (!it->second.exact) inexact = true;
    values[std::string(&cache == &shadow_ ? "S:" : "") + std::string(to_string(invariant_of(p)))] = it->second.value;
    return it->second;
  }

  Graph g_;
  DistanceTable t_;
  StructuralSummary info_;
  SearchOptions options_;
  std::optional<ShadowGraph> sg_;
  std::optional<DistanceTable> st_;
  std::map<SetProperty, Solved> base_, shadow_;
  std::optional<InvariantReport> ip_, ic_, sip_;
};

// One inequality or identity evaluated on a single graph.
struct Claim {
  std::string_view suite;
  std::string_view name;
  std::set<SetProperty> needs;
  std::function<bool(Subject&)> applies;
  // Returns a violation message, or nullopt when the claim holds.
  std::function<std::optional<std::string>(Subject&)> check;
};

inline std::string relation(std::string_view lhs, std::size_t a, std::string_view op, std::string_view rhs, long long b) {
  return std::string(lhs) + " = " + std::to_string(a) + " " + std::string(op) + " " + std::string(rhs) + " = " +
         std::to_string(b);
}

inline std::optional<std::string> require_ge(std::string_view lhs, std::size_t a, std::string_view rhs, long long b) {
  if (static_cast<long long>(a) >= b) return std::nullopt;
  return relation(lhs, a, "<", rhs, b);
}

inline std::optional<std::string> require_le(std::string_view lhs, std::size_t a, std::string_view rhs, long long b) {
  if (static_cast<long long>(a) <= b) return std::nullopt;
  return relation(lhs, a, ">", rhs, b);
}

inline bool shadow_ok(Subject& s) { return s.n() >= 2; }

inline const std::vector<Claim>& graph_claims() {
  using P = SetProperty;
  static const std::vector<Claim> claims = {
      {"gp-diam3", "gp(S(G)) >= n", {P::GP},
       [](Subject& s) { return shadow_ok(s) && s.info().diameter <= 3; },
       [](Subject& s) { return require_ge("gp(S(G))", s.on_shadow(P::GP).value, "n", static_cast<long long>(s.n())); }},
      {"gp-sandwich", "2 igp(G) <= gp(S(G))", {P::GP, P::IGP}, shadow_ok,
       [](Subject& s) {
         return require_ge("gp(S(G))", s.on_shadow(P::GP).value, "2 igp(G)",
                           static_cast<long long>(expected::gp_shadow_lower(s.base(P::IGP).value)));
       }},
      {"gp-sandwich", "gp(S(G)) <= n + min{..}", {P::GP, P::IGP}, shadow_ok,
       [](Subject& s) {
         return require_le("gp(S(G))", s.on_shadow(P::GP).value, "upper",
                           expected::gp_shadow_upper(s.n(), s.base(P::IGP).value, s.info().min_degree));
       }},
      {"gp-regular-tf", "gp(S(G)) <= n", {P::GP},
       [](Subject& s) { return shadow_ok(s) && s.info().is_regular && s.info().is_triangle_free; },
       [](Subject& s) { return require_le("gp(S(G))", s.on_shadow(P::GP).value, "n", static_cast<long long>(s.n())); }},
      {"mu-bounds", "mu(S(G)) >= n", {P::MV}, shadow_ok,
       [](Subject& s) { return require_ge("mu(S(G))", s.on_shadow(P::MV).value, "n", static_cast<long long>(s.n())); }},
      {"mu-bounds", "mu(S(G)) >= 2 Delta", {P::MV}, shadow_ok,
       [](Subject& s) {
         return require_ge("mu(S(G))", s.on_shadow(P::MV).value, "2 Delta", static_cast<long long>(2 * s.info().max_degree));
       }},
      {"mu-bounds", "mu(S(G)) >= 2 mu_i(G)", {P::MV, P::IMV}, shadow_ok,
       [](Subject& s) {
         return require_ge("mu(S(G))", s.on_shadow(P::MV).value, "2 mu_i(G)", static_cast<long long>(2 * s.base(P::IMV).value));
       }},
      {"mu-bounds", "mu(S(G)) <= n + mu(G)", {P::MV}, shadow_ok,
       [](Subject& s) {
         return require_le("mu(S(G))", s.on_shadow(P::MV).value, "n + mu(G)",
                           static_cast<long long>(s.n() + s.base(P::MV).value));
       }},
      {"mu-bounds", "mu(S(G)) <= 2n - 2", {P::MV}, shadow_ok,
       [](Subject& s) {
         return require_le("mu(S(G))", s.on_shadow(P::MV).value, "2n - 2", static_cast<long long>(2 * s.n() - 2));
       }},
      {"mu-leaf", "mu(S(G)) >= n + l(G)", {P::MV}, [](Subject& s) { return s.n() >= 3; },
       [](Subject& s) {
         return require_ge("mu(S(G))", s.on_shadow(P::MV).value, "n + l(G)",
                           static_cast<long long>(expected::mu_shadow_leaf_lower(s.n(), s.leaves())));
       }},
      {"mu-muit", "mu(S(G)) >= n + mu_it(G)", {P::MV, P::ITMV},
       [](Subject& s) { return shadow_ok(s) && s.info().is_triangle_free && !s.info().has_universal_vertex; },
       [](Subject& s) {
         return require_ge("mu(S(G))", s.on_shadow(P::MV).value, "n + mu_it(G)",
                           static_cast<long long>(expected::mu_shadow_muit_lower(s.n(), s.base(P::ITMV).value)));
       }},
      {"mu-char", "mu(S(G)) in {2,4} characterisation; never 3 or 5", {P::MV}, shadow_ok,
       [](Subject& s) -> std::optional<std::string> {
         const std::size_t mu = s.on_shadow(P::MV).value;
         const bool is_p2 = s.n() == 2;
         const bool is_p3_or_c3 = s.n() == 3;  // the connected graphs on three vertices
         if ((mu == 2) != is_p2) return "mu(S(G)) = " + std::to_string(mu) + (is_p2 ? " but G = P_2" : " but G != P_2");
         if ((mu == 4) != is_p3_or_c3)
           return "mu(S(G)) = " + std::to_string(mu) + (is_p3_or_c3 ? " but G in {P_3, C_3}" : " but G not in {P_3, C_3}");
         if (mu == 3 || mu == 5) return "mu(S(G)) = " + std::to_string(mu);
         return std::nullopt;
       }},
      {"lemma-distance", "shadow distance clauses", {}, shadow_ok,
       [](Subject& s) -> std::optional<std::string> {
         const auto violations = shadow_distance_check(s.shadow_graph(), s.graph());
         if (violations.empty()) return std::nullopt;
         const auto& v = violations.front();
         return std::to_string(violations.size()) + " violations, first d(" + v.pair + ") for x=" + std::to_string(v.x) +
                " y=" + std::to_string(v.y) + ": expected " + std::to_string(v.expected) + ", got " +
                std::to_string(v.actual);
       }},
      {"lemma-partition", "partition clauses for the solver gp-set", {P::GP}, shadow_ok,
       [](Subject& s) -> std::optional<std::string> {
         const auto failed = check_gp_partition_lemma(s.shadow_graph(), s.on_shadow(P::GP).witness);
         if (failed.empty()) return std::nullopt;
         return failed.front();
       }},
      {"ip-ic-bounds", "gp(G) <= 2 ip(G)", {P::GP}, [](Subject&) { return true; },
       [](Subject& s) -> std::optional<std::string> {
         const auto& ip = s.ip();
         if (!ip.exact) s.inexact = true;
         s.values["ip"] = ip.value;
         return require_le("gp(G)", s.base(P::GP).value, "2 ip(G)", static_cast<long long>(2 * ip.value));
       }},
      {"ip-ic-bounds", "gp(G) <= 3 ic(G)", {P::GP}, [](Subject&) { return true; },
       [](Subject& s) -> std::optional<std::string> {
         const auto& ic = s.ic();
         if (!ic.coverable) return std::nullopt;
         if (!ic.exact) s.inexact = true;
         s.values["ic"] = ic.value;
         return require_le("gp(G)", s.base(P::GP).value, "3 ic(G)", static_cast<long long>(3 * ic.value));
       }},
      {"solver-chain", "igp <= gp <= mu; mu_it <= mu_i <= mu; mu_it <= mu_t",
       {P::GP, P::IGP, P::MV, P::IMV, P::TMV, P::ITMV}, [](Subject&) { return true; },
       [](Subject& s) -> std::optional<std::string> {
         const auto v = [&](P p) { return s.base(p).value; };
         if (!(v(P::IGP) <= v(P::GP) && v(P::GP) <= v(P::MV))) return std::string("igp <= gp <= mu violated");
         if (!(v(P::ITMV) <= v(P::IMV) && v(P::IMV) <= v(P::MV))) return std::string("mu_it <= mu_i <= mu violated");
         if (!(v(P::ITMV) <= v(P::TMV))) return std::string("mu_it <= mu_t violated");
         return std::nullopt;
       }},
  };
  return claims;
}

inline std::string graph_key(const Graph& g) { return pad(g.order(), 2) + ":" + to_graph6(g); }

inline Invariant primary_invariant(std::string_view suite) {
  if (suite.starts_with("mu")) return Invariant::mu;
  return Invariant::gp;
}

inline std::string describe_values(const std::map<std::string, std::size_t>& values) {
  std::string out;
  for (const auto& [k, v] : values) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

// Evaluates every claim of `suite` on one graph; nullopt when no claim's
// hypotheses hold.
inline std::optional<InstanceRecord> evaluate_claims(std::string_view suite, Subject& s) {
  const auto start = std::chrono::steady_clock::now();
  InstanceRecord rec;
  rec.key = graph_key(s.graph());
  rec.graph = to_graph6(s.graph());
  rec.invariant = primary_invariant(suite);
  bool any = false;
  std::vector<std::string> violations;
  for (const auto& claim : graph_claims()) {
    if (claim.suite != suite || !claim.applies(s)) continue;
    any = true;
    if (auto v = claim.check(s)) violations.push_back(std::string(claim.name) + ": " + *v);
  }
  if (!any) return std::nullopt;
  const bool shadow_side = suite != "ip-ic-bounds";
  if (shadow_side && s.n() >= 2) {
    const auto& best = rec.invariant == Invariant::mu ? s.on_shadow(SetProperty::MV) : s.on_shadow(SetProperty::GP);
    rec.value = best.value;
    rec.witness = best.witness.to_vector();
    rec.witness_on_shadow = true;
  } else if (!shadow_side) {
    const auto& best = s.base(SetProperty::GP);
    rec.value = best.value;
    rec.witness = best.witness.to_vector();
  }
  rec.exact = !s.inexact;
  if (s.inexact) {
    rec.status = InstanceStatus::skipped;
    rec.detail = "node budget exhausted";
  } else if (!violations.empty()) {
    rec.status = InstanceStatus::fail;
    for (const auto& v : violations) rec.detail += (rec.detail.empty() ? "" : "; ") + v;
  }
  const std::string values = describe_values(s.values);
  if (!values.empty()) rec.detail = rec.detail.empty() ? values : rec.detail + " [" + values + "]";
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

inline bool is_graph_suite(std::string_view id) {
  for (const auto& c : graph_claims())
    if (c.suite == id) return true;
  return false;
}

// Instance built from a family: compares one solved value with a closed form.
struct FamilyCase {
  std::string key;
  std::string family;
  Graph graph;
  std::function<InstanceRecord(const Graph&, const SearchOptions&)> evaluate;
};

inline InstanceRecord compare_on_shadow(const Graph& g, SetProperty p, std::size_t want, std::string_view what,
                                        const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ShadowGraph sg = shadow(g);
  const auto r = max_set(p, sg.graph(), options);
  InstanceRecord rec;
  rec.graph = to_graph6(g);
  rec.invariant = invariant_of(p);
  rec.value = r.value;
  rec.exact = r.exact;
  rec.witness = r.witness->to_vector();
  rec.witness_on_shadow = true;
  rec.detail = std::string(what) + ": expected " + std::to_string(want) + ", computed " + std::to_string(r.value);
  if (!r.exact) rec.status = InstanceStatus::skipped;
  else rec.status = r.value == want ? InstanceStatus::pass : InstanceStatus::fail;
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// Multisets of part sizes >= lo with at least `min_parts` parts and sum <= total,
// each listed in non-increasing order.
inline std::vector<std::vector<std::size_t>> part_multisets(std::size_t lo, std::size_t total, std::size_t min_parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t cap) -> void {
    if (cur.size() >= min_parts) out.push_back(cur);
    for (std::size_t p = std::min(cap, left); p >= lo; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total, total);
  std::sort(out.begin(), out.end());
  return out;
}

// Seeded trees passing `accept`, drawn until `count` are found (or the attempt
// cap is hit). Orders are spread over [lo, hi].
inline std::vector<std::pair<std::uint64_t, Graph>> seeded_trees(std::uint64_t seed, std::size_t count, std::size_t lo,
                                                                  std::size_t hi,
                                                                  const std::function<bool(const Graph&)>& accept,
                                                                  std::size_t& rejected) {
  std::vector<std::pair<std::uint64_t, Graph>> out;
  rejected = 0;
  for (std::uint64_t i = 0; out.size() < count && i < 50 * count; ++i) {
    const std::uint64_t s = splitmix64(seed * 0x9e3779b97f4a7c15ULL + i);
    const std::size_t n = lo + static_cast<std::size_t>(s % (hi - lo + 1));
    Graph t = random_tree(n, s);
    if (accept(t)) out.emplace_back(s, std::move(t));
    else ++rejected;
  }
  return out;
}

inline std::vector<FamilyCase> family_cases(std::string_view id, const SuiteParams& params, std::size_t n_max,
                                            SuiteReport& report) {
  std::vector<FamilyCase> cases;
  auto add = [&](std::string key, const std::string& family,
                 std::function<InstanceRecord(const Graph&, const SearchOptions&)> eval) {
    Graph g = generate(family);
    cases.push_back({std::move(key), family, std::move(g), std::move(eval)});
  };
  using P = SetProperty;
  if (id == "gp-complete") {
    for (std::size_t n = 2; n <= n_max; ++n)
      add("n=" + pad(n), "complete:" + std::to_string(n), [n](const Graph& g, const SearchOptions& o) {
        return compare_on_shadow(g, P::GP, expected::gp_shadow_complete(n), "gp(S(K_n))", o);
      });
  } else if (id == "gp-bipartite") {
    for (std::size_t m = 2; m <= n_max; ++m)
      for (std::size_t n = 2; n <= m; ++n)
        add("m=" + pad(m) + ",n=" + pad(n), "bipartite:" + std::to_string(m) + "," + std::to_string(n),
            [m, n](const Graph& g, const SearchOptions& o) {
              return compare_on_shadow(g, P::GP, expected::gp_shadow_bipartite(m, n), "gp(S(K_{m,n}))", o);
            });
  } else if (id == "gp-join") {
    report.notes.emplace_back("cliques of order 1 are not enumerated; every W_i has order >= 2");
    for (const auto& parts : part_multisets(2, n_max - 1, 2))
      add("parts=" + join_sizes(parts), "join:" + join_sizes(parts), [parts](const Graph& g, const SearchOptions& o) {
        return compare_on_shadow(g, P::GP, expected::gp_shadow_join(parts), "gp(S(K_1 + W))", o);
      });
  } else if (id == "gp-cycles") {
    for (std::size_t n = 3; n <= n_max; ++n)
      add("n=" + pad(n), "cycle:" + std::to_string(n), [n](const Graph& g, const SearchOptions& o) {
        return compare_on_shadow(g, P::GP, expected::gp_shadow_cycle(n), "gp(S(C_n))", o);
      });
  } else if (id == "mu-cycles") {
    for (std::size_t n = 3; n <= n_max; ++n)
      add("n=" + pad(n), "cycle:" + std::to_string(n), [n](const Graph& g, const SearchOptions& o) {
        return compare_on_shadow(g, P::MV, expected::mu_shadow_cycle(n), "mu(S(C_n))", o);
      });
  } else if (id == "mu-multipartite") {
    for (const auto& parts : part_multisets(2, n_max, 2)) {
      std::size_t n = 0;
      for (auto p : parts) n += p;
      add("parts=" + join_sizes(parts), "kpartite:" + join_sizes(parts), [n](const Graph& g, const SearchOptions& o) {
        return compare_on_shadow(g, P::MV, expected::mu_shadow_multipartite(n), "mu(S(K_{n_1..n_k}))", o);
      });
    }
  } else if (id == "gp-trees" || id == "mu-trees") {
    const bool gp = id == "gp-trees";
    const Distance min_diam = gp ? 2 : 3;
    std::size_t rejected = 0;
    const auto trees = seeded_trees(
        params.seed, params.trees, gp ? 3 : 4, std::max<std::size_t>(n_max, gp ? 3 : 4),
        [&](const Graph& t) { return distances(t).diameter() >= min_diam; }, rejected);
    report.excluded += rejected;
    if (!gp) report.notes.emplace_back("stars (diameter 2) are excluded; the identity is claimed for diameter >= 3");
    for (const auto& [tree_seed, t] : trees) {
      const std::size_t n = t.order();
      const std::string family = "tree:" + std::to_string(n) + ":seed=" + std::to_string(tree_seed);
      const std::size_t l = structural_queries(t).leaves.size();
      cases.push_back({"n=" + pad(n) + ",seed=" + std::to_string(tree_seed), family, t,
                       [gp, n, l](const Graph& g, const SearchOptions& o) {
                         if (!gp) return compare_on_shadow(g, P::MV, expected::mu_shadow_tree(n, l), "mu(S(T))", o);
                         auto rec = compare_on_shadow(g, P::GP, expected::gp_shadow_tree(l), "gp(S(T))", o);
                         const auto sg = shadow(g);
                         const auto ip = isometric_path_cover(sg.graph());
                         rec.detail += "; ip(S(T)) = " + std::to_string(ip.value) + " (l = " + std::to_string(l) + ")";
                         if (rec.status == InstanceStatus::pass && ip.value > l) {
                           rec.status = ip.exact ? InstanceStatus::fail : InstanceStatus::skipped;
                           rec.detail += " exceeds l(T)";
                         }
                         return rec;
                       }});
    }
  }
  return cases;
}

inline SuiteReport run_balloon(const SuiteParams& params) {
  SuiteReport report;
  const std::size_t k = params.balloon_k;
  const std::string family = "balloon:" + std::to_string(k);
  const Graph g = generate(family);
  report.notes.emplace_back("mu(S(G_k)) is checked with the local-search lower bound, not exact search");

  {
    const auto start = std::chrono::steady_clock::now();
    const auto r = max_set(SetProperty::TMV, g, params.search);
    InstanceRecord rec;
    rec.key = "k=" + pad(k) + ":mu_t";
    rec.graph = to_graph6(g);
    rec.family = family;
    rec.invariant = Invariant::mu_t;
    rec.value = r.value;
    rec.exact = r.exact;
    rec.witness = r.witness->to_vector();
    rec.detail = "mu_t(G_k): expected 0, computed " + std::to_string(r.value);
    rec.status = !r.exact ? InstanceStatus::skipped : (r.value == 0 ? InstanceStatus::pass : InstanceStatus::fail);
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.instances.push_back(rec);
  }
  {
    const auto start = std::chrono::steady_clock::now();
    const ShadowGraph sg = shadow(g);
    const std::size_t target = expected::mu_shadow_balloon_lower(k);
    HeuristicOptions h;
    h.seconds = params.heuristic_seconds;
    h.seed = params.seed;
    h.target = target;
    const auto r = max_set_heuristic(SetProperty::MV, sg.graph(), h);
    InstanceRecord rec;
    rec.key = "k=" + pad(k) + ":mu";
    rec.graph = to_graph6(g);
    rec.family = family;
    rec.invariant = Invariant::mu;
    rec.value = r.value;
    rec.exact = false;
    rec.witness = r.witness->to_vector();
    rec.witness_on_shadow = true;
    if (r.value >= target) {
      rec.detail = "found a mutual-visibility set of size " + std::to_string(r.value) + " >= " + std::to_string(target);
    } else {
      rec.status = InstanceStatus::fail;
      rec.detail = "discrepancy: best mutual-visibility set found has size " + std::to_string(r.value) + " < " +
                   std::to_string(target) + " within " + std::to_string(params.heuristic_seconds) + " s";
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.instances.push_back(rec);
  }
  return report;
}

}  // namespace detail

inline std::string available_suites() {
  std::string out;
  for (const auto& s : suite_catalog()) out += (out.empty() ? "" : ", ") + std::string(s.id);
  return out;
}

inline const SuiteInfo& suite_info(std::string_view id) {
  for (const auto& s : suite_catalog())
    if (s.id == id) return s;
  throw ParseError("unknown suite '" + std::string(id) + "'; available: " + available_suites());
}

inline SuiteReport run_suite(std::string_view id, const SuiteParams& params = {}) {
  const SuiteInfo& info = suite_info(id);
  const std::size_t n_max = params.n_max.value_or(info.default_n_max);
  SuiteReport report;

  if (id == "mu-balloon") {
    report = detail::run_balloon(params);
  } else if (detail::is_graph_suite(id)) {
    const auto graphs = enumerate_connected(std::min(n_max, kMaxEnumerationOrder), params.dedup);
    std::vector<std::optional<InstanceRecord>> results(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
      detail::Subject subject(graphs[i], params.search);
      results[i] = detail::evaluate_claims(id, subject);
    });
    for (auto& r : results) {
      if (r) report.instances.push_back(std::move(*r));
      else ++report.excluded;
    }
    if (!params.dedup) report.notes.emplace_back("labelled enumeration");
    else report.notes.emplace_back("one representative per isomorphism class");
  } else {
    auto cases = detail::family_cases(id, params, n_max, report);
    std::vector<InstanceRecord> results(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
      results[i] = cases[i].evaluate(cases[i].graph, params.search);
      results[i].key = cases[i].key;
      results[i].family = cases[i].family;
    });
    report.instances = std::move(results);
  }
  report.id = std::string(info.id);
  report.claim = std::string(info.claim);
  std::sort(report.instances.begin(), report.instances.end(),
            [](const InstanceRecord& a, const InstanceRecord& b) { return a.key < b.key; });
  return report;
}

struct FuzzRecord {
  std::string graph;  // graph6
  std::size_t n = 0;
  std::map<std::string, std::size_t> values;
  std::vector<std::string> violations;  // "suite/claim: message"
  std::vector<std::string> checked;     // claims evaluated
  bool skipped = false;
};

inline constexpr std::size_t kFuzzSampledSets = 16;

// Runs every per-graph claim whose required properties are all in
// `properties` over the connected graphs on <= n_max vertices (one per
// isomorphism class). Records are emitted as soon as each graph is done, so
// their order follows completion. In addition, `seed` drives kFuzzSampledSets random
// vertex subsets per graph, each checked against GP => MV and TMV => MV.
inline void fuzz(std::size_t n_max, const std::set<SetProperty>& properties, std::uint64_t seed,
                 const std::function<void(const FuzzRecord&)>& emit, const SearchOptions& search = {}) {
  if (n_max > kMaxEnumerationOrder)
    throw PreconditionError("fuzz is capped at n_max = " + std::to_string(kMaxEnumerationOrder));
  const auto graphs = enumerate_connected(n_max, true);
  std::mutex emit_mutex;
  parallel_for(graphs.size(), [&](std::size_t i) {
    detail::Subject s(graphs[i], search);
    FuzzRecord rec;
    rec.graph = to_graph6(graphs[i]);
    rec.n = graphs[i].order();
    for (const auto& claim : detail::graph_claims()) {
      if (!std::includes(properties.begin(), properties.end(), claim.needs.begin(), claim.needs.end())) continue;
      if (!claim.applies(s)) continue;
      rec.checked.push_back(std::string(claim.suite) + "/" + std::string(claim.name));
      if (auto v = claim.check(s)) rec.violations.push_back(std::string(claim.suite) + "/" + std::string(claim.name) + ": " + *v);
    }
    std::mt19937_64 rng(splitmix64(seed ^ (i + 1)));
    const Graph& g = graphs[i];
    for (std::size_t k = 0; k < kFuzzSampledSets; ++k) {
      const VertexSet sample(g.order(), rng() & VertexSet::full_mask(g.order()));
      const bool mv = is_mv_set(g, s.table(), sample);
      if (is_gp_set(s.table(), sample) && !mv) rec.violations.push_back("visibility-chain: GP set " + sample.to_string() + " is not MV");
      if (is_total_mv_set(g, s.table(), sample) && !mv)
        rec.violations.push_back("visibility-chain: TMV set " + sample.to_string() + " is not MV");
    }
    rec.checked.emplace_back("visibility-chain/sampled sets");
    rec.values = s.values;
    rec.skipped = s.inexact;
    std::lock_guard lock(emit_mutex);
    emit(rec);
  });
}

}  // namespace shadowpos
