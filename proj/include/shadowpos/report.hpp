#pragma once

#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "shadowpos/graph_io.hpp"
#include "shadowpos/shadow.hpp"
#include "shadowpos/solvers.hpp"
#include "shadowpos/verify.hpp"

namespace shadowpos {

inline constexpr std::string_view kReportSchema = "shadowpos.report/1";
inline constexpr std::string_view kSuiteSchema = "shadowpos.suite/1";
inline constexpr std::string_view kRunRecordSchema = "shadowpos.run/1";

using Json = nlohmann::ordered_json;

inline double milliseconds(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

// Describes the graph the invariant was computed on. `base_n` is set when
// that graph is S(G) (or a star shadow) of a base graph with base_n vertices.
struct GraphContext {
  std::string source;
  std::string transform = "none";  // none | shadow | star-shadow
  std::optional<std::size_t> base_n;
};

inline Json to_json(const InvariantReport& r, const Graph& g, const GraphContext& ctx) {
  Json j;
  j["schema"] = kReportSchema;
  j["invariant"] = to_string(r.invariant);
  j["value"] = r.value;
  j["exact"] = r.exact;
  if (r.invariant == Invariant::ic) j["coverable"] = r.coverable;
  if (r.witness) j["witness"] = r.witness->to_vector();
  if (!r.cover.empty()) j["cover"] = r.cover;
  if (!r.coloring.empty()) j["coloring"] = r.coloring;
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed_ms"] = milliseconds(r.elapsed);
  Json graph;
  graph["source"] = ctx.source;
  graph["transform"] = ctx.transform;
  graph["n"] = g.order();
  graph["m"] = g.size();
  graph["graph6"] = to_graph6(g);
  if (ctx.base_n) {
    graph["base_n"] = *ctx.base_n;
    graph["vertex_convention"] = kShadowConvention;
  }
  j["graph"] = graph;
  return j;
}

inline Json to_json(const InstanceRecord& r) {
  Json j;
  j["key"] = r.key;
  j["status"] = to_string(r.status);
  j["graph6"] = r.graph;
  if (!r.family.empty()) j["family"] = r.family;
  j["invariant"] = to_string(r.invariant);
  j["value"] = r.value;
  j["exact"] = r.exact;
  j["witness"] = r.witness;
  j["witness_on"] = r.witness_on_shadow ? "S(G)" : "G";
  j["detail"] = r.detail;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(const SuiteReport& s) {
  Json j;
  j["schema"] = kSuiteSchema;
  j["suite"] = s.id;
  j["claim"] = s.claim;
  j["instances"] = s.instances.size();
  j["pass"] = s.passed();
  j["fail"] = s.failed();
  j["skipped"] = s.skipped();
  j["excluded"] = s.excluded;
  j["notes"] = s.notes;
  j["vertex_convention"] = kShadowConvention;
  Json list = Json::array();
  for (const auto& r : s.instances) list.push_back(to_json(r));
  j["records"] = list;
  return j;
}

inline InstanceRecord instance_from_json(const Json& j) {
  InstanceRecord r;
  r.key = j.at("key").get<std::string>();
  const auto status = j.at("status").get<std::string>();
  r.status = status == "PASS" ? InstanceStatus::pass : status == "FAIL" ? InstanceStatus::fail : InstanceStatus::skipped;
  r.graph = j.at("graph6").get<std::string>();
  if (j.contains("family")) r.family = j.at("family").get<std::string>();
  r.value = j.at("value").get<std::size_t>();
  r.exact = j.at("exact").get<bool>();
  r.witness = j.at("witness").get<std::vector<Vertex>>();
  r.witness_on_shadow = j.at("witness_on").get<std::string>() == "S(G)";
  r.detail = j.at("detail").get<std::string>();
  const auto inv = j.at("invariant").get<std::string>();
  for (auto candidate : {Invariant::gp, Invariant::igp, Invariant::mu, Invariant::mu_i, Invariant::mu_t,
                         Invariant::mu_it, Invariant::ip, Invariant::ic, Invariant::chi})
    if (to_string(candidate) == inv) r.invariant = candidate;
  return r;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct RunRecord {
  std::string timestamp;
  std::string command;
  std::string graph;  // graph6 or family spec
  std::string invariant;
  std::size_t value = 0;
  bool exact = true;
  std::vector<Vertex> witness;  // sorted
  double elapsed_ms = 0;
  Json extra = Json::object();
};

inline Json to_json(const RunRecord& r) {
  Json j;
  j["schema"] = kRunRecordSchema;
  j["vertex_convention"] = kShadowConvention;
  j["timestamp"] = r.timestamp;
  j["command"] = r.command;
  j["graph"] = r.graph;
  j["invariant"] = r.invariant;
  j["value"] = r.value;
  j["exact"] = r.exact;
  std::vector<Vertex> w = r.witness;
  std::sort(w.begin(), w.end());
  j["witness"] = w;
  j["elapsed_ms"] = r.elapsed_ms;
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

// Appends one JSON object per line. All writes go through one mutex and one
// open stream, flushed per record.
class RunLog {
 public:
  explicit RunLog(const std::string& path) : out_(path, std::ios::app) {
    if (!out_) throw PreconditionError("cannot open log file '" + path + "' for appending");
  }

  void append(const RunRecord& r) {
    const std::string line = to_json(r).dump() + "\n";
    std::lock_guard lock(mutex_);
    out_ << line;
    out_.flush();
  }

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

}  // namespace shadowpos
