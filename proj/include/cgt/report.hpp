#pragma once

// Scenario reports and their text / JSON renderings. Both renderings are
// produced from the same Report value; JSON keys come out sorted.

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arith.hpp"
#include "deduction.hpp"
#include "stats.hpp"

namespace cgt {

inline constexpr const char* kToolVersion = "1.0.0";

struct GroupBlock {
  std::string name;
  std::string description;
  Factorization factorization;
  Integer order;
  Spectrum spectrum;
  std::string source;  // "enumeration" or "paper-data"
  std::optional<OrderCountTable> table;
  std::optional<NseMultiset> nse;
  std::optional<std::uint64_t> p;
  std::optional<Integer> order_p_count;
  std::string count_source;
  std::optional<std::uint64_t> centralizer_order;
  std::string centralizer_source;  // "spectrum rule" or "enumeration"
  std::vector<SylowCountCandidate> candidates;
  std::vector<Integer> derived_series;
  std::optional<bool> solvable;
  std::optional<std::uint64_t> center_order;
  std::optional<Integer> generated_by_p_order;
  std::vector<std::string> notes;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string scenario;
  std::vector<GroupBlock> groups;
  std::vector<Check> checks;
  Verdict verdict = Verdict::inconclusive;
  std::string summary;
  std::uint64_t seed = 1;
  std::string version = kToolVersion;
  double duration_ms = 0;

  bool all_checks_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Integers that fit in 64 bits become JSON numbers; larger ones become decimal strings.
inline nlohmann::json integer_json(const Integer& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

inline nlohmann::json to_json(const GroupBlock& g) {
  using nlohmann::json;
  json j;
  j["name"] = g.name;
  j["description"] = g.description;
  j["order"] = integer_json(g.order);
  json f = json::array();
  for (const auto& [p, e] : g.factorization) f.push_back({p, e});
  j["order_factorization"] = f;
  j["spectrum"] = g.spectrum;
  j["source"] = g.source;
  if (g.table) {
    json t = json::array();
    for (const auto& [k, m] : g.table->counts) t.push_back({k, m});
    j["order_counts"] = t;
  }
  if (g.nse) j["nse"] = *g.nse;
  if (g.p) j["p"] = *g.p;
  if (g.order_p_count) {
    j["order_p_count"] = integer_json(*g.order_p_count);
    j["order_p_count_source"] = g.count_source;
  }
  if (g.centralizer_order) {
    j["centralizer_order"] = *g.centralizer_order;
    j["centralizer_source"] = g.centralizer_source;
  }
  if (!g.candidates.empty()) {
    json c = json::array();
    for (const auto& cand : g.candidates)
      c.push_back({{"m", cand.m}, {"n_p", integer_json(cand.n_p)}, {"count", integer_json(cand.count)}});
    j["sylow_candidates"] = c;
  }
  if (!g.derived_series.empty()) {
    json d = json::array();
    for (const auto& n : g.derived_series) d.push_back(integer_json(n));
    j["derived_series"] = d;
  }
  if (g.solvable) j["solvable"] = *g.solvable;
  if (g.center_order) j["center_order"] = *g.center_order;
  if (g.generated_by_p_order) j["generated_by_order_p_elements"] = integer_json(*g.generated_by_p_order);
  if (!g.notes.empty()) j["notes"] = g.notes;
  return j;
}

inline nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json j;
  j["scenario"] = r.scenario;
  j["verdict"] = to_string(r.verdict);
  j["summary"] = r.summary;
  j["seed"] = r.seed;
  j["version"] = r.version;
  j["duration_ms"] = r.duration_ms;
  json groups = json::array();
  for (const auto& g : r.groups) groups.push_back(to_json(g));
  j["groups"] = groups;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "scenario: " << r.scenario << '\n';
  for (const auto& g : r.groups) {
    os << "  group " << g.name;
    if (!g.description.empty()) os << " (" << g.description << ")";
    os << '\n';
    os << "    order: " << g.order << " = " << to_string(g.factorization) << '\n';
    os << "    spectrum: {" << join(g.spectrum) << "}\n";
    os << "    source: " << g.source << '\n';
    if (g.table) {
      os << "    order counts:";
      for (const auto& [k, m] : g.table->counts) os << ' ' << k << ':' << m;
      os << '\n';
    }
    if (g.nse) os << "    nse: {" << join(*g.nse) << "}\n";
    if (g.p) os << "    p: " << *g.p << '\n';
    if (g.order_p_count) os << "    order-p count: " << *g.order_p_count << " (" << g.count_source << ")\n";
    if (g.centralizer_order)
      os << "    |C(<a>)| for a of order p: " << *g.centralizer_order << " (" << g.centralizer_source << ")\n";
    for (const auto& c : g.candidates)
      os << "    sylow candidate: m=" << c.m << " n_p=" << c.n_p << " count=" << c.count << '\n';
    if (!g.derived_series.empty()) os << "    derived series: " << join(g.derived_series, " > ") << '\n';
    if (g.solvable) os << "    solvable: " << (*g.solvable ? "yes" : "no") << '\n';
    if (g.center_order) os << "    center order: " << *g.center_order << '\n';
    if (g.generated_by_p_order) os << "    subgroup generated by order-p elements: " << *g.generated_by_p_order << '\n';
    for (const auto& n : g.notes) os << "    note: " << n << '\n';
  }
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << "verdict: " << to_string(r.verdict);
  if (!r.summary.empty()) os << " (" << r.summary << ")";
  os << '\n';
  os << "seed: " << r.seed << "  version: " << r.version << "  duration_ms: " << r.duration_ms << '\n';
  return os.str();
}

}  // namespace cgt
