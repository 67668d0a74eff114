// Command-line front end: compute, transform, verify, fuzz.
//
// Exit codes: 0 success, 1 verification failures, 2 parse error or unknown
// suite, 3 precondition violated, 4 node budget exhausted under --exact,
// 5 output path not writable.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "shadowpos/shadowpos.hpp"

namespace {

using namespace shadowpos;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kPrecondition = 3,
  kBudgetExhausted = 4,
  kUnwritable = 5,
};

const std::map<std::string, Invariant> kInvariantNames = {
    {"gp", Invariant::gp},   {"igp", Invariant::igp},   {"mu", Invariant::mu},
    {"mui", Invariant::mu_i}, {"mut", Invariant::mu_t}, {"muit", Invariant::mu_it},
    {"ip", Invariant::ip},   {"ic", Invariant::ic},     {"chi", Invariant::chi},
};

const std::map<std::string, SetProperty> kPropertyNames = {
    {"gp", SetProperty::GP},  {"igp", SetProperty::IGP}, {"mv", SetProperty::MV},
    {"imv", SetProperty::IMV}, {"tmv", SetProperty::TMV}, {"itmv", SetProperty::ITMV},
};

struct ComputeArgs {
  std::string invariant;
  std::string graph;
  bool shadow = false;
  bool star_shadow = false;
  bool exact = false;
  bool heuristic = false;
  double seconds = 1.0;
  std::uint64_t seed = 0;
  bool canonical = false;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string log;
};

struct TransformArgs {
  std::string graph;
  std::string op;
  std::string out;
  std::string format = "g6";
};

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> n_max;
  std::uint64_t seed = 1;
  std::size_t trees = 50;
  double seconds = 60.0;
  std::string log;
  std::string json;
  bool labelled = false;
};

struct FuzzArgs {
  std::size_t n_max = 4;
  std::vector<std::string> properties;
  std::uint64_t seed = 1;
};

// Applies the requested transform; base_n is set when the result is built
// on top of a base graph with that many vertices.
Graph prepare(const Graph& base, bool as_shadow, bool as_star, GraphContext& ctx) {
  if (as_shadow && as_star) throw ParseError("--shadow and --star-shadow are mutually exclusive");
  if (as_shadow) {
    ctx.transform = "shadow";
    ctx.base_n = base.order();
    return shadow(base).graph();
  }
  if (as_star) {
    ctx.transform = "star-shadow";
    ctx.base_n = base.order();
    return star_shadow(base);
  }
  return base;
}

int run_compute(const ComputeArgs& args) {
  const Invariant inv = kInvariantNames.at(args.invariant);
  GraphContext ctx{args.graph, "none", std::nullopt};
  const Graph g = prepare(load_graph(args.graph), args.shadow, args.star_shadow, ctx);
  if (!is_connected(g)) throw PreconditionError("the graph to be solved is disconnected");
  const DistanceTable t(g);

  InvariantReport report;
  if (auto property = property_of(inv)) {
    if (args.heuristic) {
      HeuristicOptions h;
      h.seconds = args.seconds;
      h.seed = args.seed;
      report = max_set_heuristic(*property, g, t, h);
    } else {
      SearchOptions o;
      o.node_budget = args.budget;
      o.canonical = args.canonical;
      report = max_set(*property, g, t, o);
    }
  } else if (inv == Invariant::ip) {
    report = isometric_path_cover(g, t, kDefaultEnumerationCap, args.budget);
  } else if (inv == Invariant::ic) {
    report = isometric_cycle_cover(g, t, kDefaultEnumerationCap, args.budget);
  } else {
    report = chromatic_number(g);
  }

  std::cout << to_json(report, g, ctx).dump(2) << "\n";
  if (!args.log.empty()) {
    RunLog log(args.log);
    RunRecord rec{utc_timestamp(), "compute", args.graph, std::string(to_string(inv)), report.value, report.exact,
                  report.witness ? report.witness->to_vector() : std::vector<Vertex>{}, milliseconds(report.elapsed)};
    rec.extra["transform"] = ctx.transform;
    log.append(rec);
  }
  if (args.exact && !report.exact) return kBudgetExhausted;
  return kOk;
}

int run_transform(const TransformArgs& args) {
  const Graph base = load_graph(args.graph);
  GraphContext ctx{args.graph, "none", std::nullopt};
  const Graph g = prepare(base, args.op == "shadow", args.op == "star-shadow", ctx);
  std::string text;
  if (args.format == "g6") text = to_graph6(g) + "\n";
  else if (args.format == "edges") text = write_edge_list(g);
  else text = write_dot(g, ctx.base_n);
  std::ofstream out(args.out, std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    std::cerr << "error: cannot write '" << args.out << "'\n";
    return kUnwritable;
  }
  return kOk;
}

void print_summary(const std::vector<SuiteReport>& reports) {
  std::cout << std::left << std::setw(18) << "suite" << std::right << std::setw(10) << "instances" << std::setw(7)
            << "pass" << std::setw(7) << "fail" << std::setw(9) << "skipped" << std::setw(10) << "excluded" << "\n";
  for (const auto& r : reports)
    std::cout << std::left << std::setw(18) << r.id << std::right << std::setw(10) << r.instances.size() << std::setw(7)
              << r.passed() << std::setw(7) << r.failed() << std::setw(9) << r.skipped() << std::setw(10) << r.excluded
              << "\n";
  for (const auto& r : reports)
    for (const auto& rec : r.instances)
      if (rec.status == InstanceStatus::fail)
        std::cout << "FAIL " << r.id << " " << rec.key << " g6=" << rec.graph << " : " << rec.detail << "\n";
}

int run_verify(const VerifyArgs& args) {
  std::vector<std::string> ids;
  if (args.suite == "all") {
    for (const auto& s : suite_catalog()) ids.emplace_back(s.id);
  } else {
    suite_info(args.suite);  // throws on unknown id
    ids.push_back(args.suite);
  }
  SuiteParams params;
  params.n_max = args.n_max;
  params.seed = args.seed;
  params.trees = args.trees;
  params.heuristic_seconds = args.seconds;
  params.dedup = !args.labelled;

  std::optional<RunLog> log;
  if (!args.log.empty()) log.emplace(args.log);
  std::vector<SuiteReport> reports;
  Json all = Json::array();
  for (const auto& id : ids) {
    reports.push_back(run_suite(id, params));
    const auto& rep = reports.back();
    all.push_back(to_json(rep));
    if (log) {
      for (const auto& rec : rep.instances) {
        RunRecord rr{utc_timestamp(), "verify", rec.family.empty() ? rec.graph : rec.family,
                     std::string(to_string(rec.invariant)), rec.value, rec.exact, rec.witness, rec.elapsed_ms};
        rr.extra["suite"] = rep.id;
        rr.extra["instance"] = rec.key;
        rr.extra["status"] = to_string(rec.status);
        rr.extra["graph6"] = rec.graph;
        rr.extra["witness_on"] = rec.witness_on_shadow ? "S(G)" : "G";
        rr.extra["detail"] = rec.detail;
        log->append(rr);
      }
    }
  }
  print_summary(reports);
  if (!args.json.empty()) {
    std::ofstream out(args.json, std::ios::trunc);
    if (!out || !(out << all.dump(2) << "\n")) {
      std::cerr << "error: cannot write '" << args.json << "'\n";
      return kUnwritable;
    }
  }
  for (const auto& r : reports)
    if (r.failed() > 0) return kVerifyFailed;
  return kOk;
}

int run_fuzz(const FuzzArgs& args) {
  std::set<SetProperty> properties;
  if (args.properties.empty())
    properties.insert(kAllSetProperties.begin(), kAllSetProperties.end());
  for (const auto& name : args.properties) {
    auto it = kPropertyNames.find(name);
    if (it == kPropertyNames.end()) throw ParseError("unknown property '" + name + "'");
    properties.insert(it->second);
  }
  std::size_t violations = 0;
  fuzz(args.n_max, properties, args.seed, [&](const FuzzRecord& r) {
    Json j;
    j["graph6"] = r.graph;
    j["n"] = r.n;
    j["values"] = r.values;
    j["checked"] = r.checked;
    j["violations"] = r.violations;
    j["skipped"] = r.skipped;
    std::cout << j.dump() << "\n";
    violations += r.violations.size();
  });
  return violations == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shadowpos: general position and mutual visibility in shadow graphs"};
  app.require_subcommand(1);

  std::vector<std::string> invariant_names;
  for (const auto& [k, v] : kInvariantNames) invariant_names.push_back(k);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "compute one invariant and print it as JSON");
  c->add_option("--invariant", compute.invariant, "invariant to compute")
      ->required()
      ->check(CLI::IsMember(invariant_names));
  c->add_option("--graph", compute.graph, "edge-list / graph6 file, g6:<code>, or family spec")->required();
  c->add_flag("--shadow", compute.shadow, "solve on S(G)");
  c->add_flag("--star-shadow", compute.star_shadow, "solve on the star shadow graph");
  auto* exact_flag = c->add_flag("--exact", compute.exact, "exact search; exit 4 if the budget runs out");
  auto* heur_flag = c->add_flag("--heuristic", compute.heuristic, "local search lower bound");
  exact_flag->excludes(heur_flag);
  c->add_option("--time", compute.seconds, "heuristic time budget in seconds");
  c->add_option("--seed", compute.seed, "heuristic seed");
  c->add_flag("--canonical-witness", compute.canonical, "sequential search with a reproducible witness");
  c->add_option("--budget", compute.budget, "search node budget");
  c->add_option("--log", compute.log, "append a JSONL run record");

  TransformArgs transform;
  auto* t = app.add_subcommand("transform", "write S(G) or the star shadow graph");
  t->add_option("--graph", transform.graph, "graph source")->required();
  t->add_option("--op", transform.op, "shadow | star-shadow")->required()->check(CLI::IsMember({"shadow", "star-shadow"}));
  t->add_option("--out", transform.out, "output path")->required();
  t->add_option("--format", transform.format, "g6 | edges | dot")->check(CLI::IsMember({"g6", "edges", "dot"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "replay the claim suites");
  v->add_option("--suite", verify.suite, "suite id or 'all'")->required();
  v->add_option("--n-max", verify.n_max, "override the suite's order range");
  v->add_option("--seed", verify.seed, "seed for random instances");
  v->add_option("--trees", verify.trees, "random trees per tree suite");
  v->add_option("--time", verify.seconds, "heuristic time budget (mu-balloon)");
  v->add_option("--log", verify.log, "append JSONL run records");
  v->add_option("--json", verify.json, "write the suite reports as JSON");
  v->add_flag("--labelled", verify.labelled, "enumerate labelled graphs instead of isomorphism classes");

  FuzzArgs fuzz_args;
  auto* f = app.add_subcommand("fuzz", "check all per-graph claims over small connected graphs");
  f->add_option("--n-max", fuzz_args.n_max, "largest order (<= 7)");
  f->add_option("--properties", fuzz_args.properties, "restrict to gp,igp,mv,imv,tmv,itmv")->delimiter(',');
  f->add_option("--seed", fuzz_args.seed, "seed for sampled sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*c) return run_compute(compute);
    if (*t) return run_transform(transform);
    if (*v) return run_verify(verify);
    if (*f) return run_fuzz(fuzz_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
