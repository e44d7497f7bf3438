#pragma once

/**
 * @file scenarios.hpp
 * @brief Verification scenarios run by the command-line front end.
 *
 * Each scenario analyzes catalog groups, records every check it makes and
 * ends with one verdict. Data checks (computed order and spectrum against
 * the fact sheet, table invariants) run for every constructed group; a
 * failing data check turns the verdict into data-contradiction.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "deduction.hpp"
#include "group.hpp"
#include "report.hpp"
#include "stats.hpp"

namespace cgt {

struct HarnessOptions {
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// Everything computed about one catalog entry.
struct GroupAnalysis {
  const CatalogEntry* entry = nullptr;
  std::optional<GeneratedGroup> group;
  std::optional<OrderCountTable> table;
  std::optional<DerivedSeries> derived;
  std::vector<Check> data_checks;
  std::vector<std::string> notes;

  bool data_ok() const {
    return std::all_of(data_checks.begin(), data_checks.end(), [](const Check& c) { return c.passed; });
  }
};

inline GroupAnalysis analyze(const CatalogEntry& entry, const HarnessOptions& opts) {
  GroupAnalysis a;
  a.entry = &entry;
  if (!entry.constructed()) return a;

  Construction built = entry.construct(opts.seed);
  a.notes = std::move(built.notes);
  StabilizerChain chain = build_chain(built.group);
  a.table = order_count_table(chain, opts.cap);
  a.derived = derived_series(built.group);
  a.group = std::move(built.group);

  const std::string& name = entry.sheet.name;
  const Integer computed = chain.order();
  a.data_checks.push_back({name + " order matches sheet", computed == entry.sheet.order_value(),
                           "computed " + computed.str() + ", sheet " + entry.sheet.order_value().str()});
  const Spectrum s = spectrum(*a.table);
  a.data_checks.push_back({name + " spectrum matches sheet", s == entry.sheet.spectrum,
                           "computed {" + join(s) + "}, sheet {" + join(entry.sheet.spectrum) + "}"});
  for (const auto& [k, m] : entry.stated_counts) {
    a.data_checks.push_back({name + " has " + std::to_string(m) + " elements of order " + std::to_string(k),
                             a.table->count(k) == m, "computed " + std::to_string(a.table->count(k))});
  }
  if (entry.stated_nse) {
    a.data_checks.push_back({name + " nse matches", nse(*a.table) == *entry.stated_nse,
                             "computed {" + join(nse(*a.table)) + "}"});
  }
  const std::string violation = table_violation(*a.table);
  a.data_checks.push_back({name + " table invariants", violation.empty(), violation});
  const std::uint64_t frob = frobenius_divisibility_failure(*a.table);
  a.data_checks.push_back({name + " Frobenius divisibility", frob == 0,
                           frob ? "fails at n = " + std::to_string(frob) : std::string{}});
  return a;
}

inline GroupProfile profile(const GroupAnalysis& a) {
  GroupProfile p;
  p.sheet = a.entry->sheet;
  if (a.table) {
    // Enumerated data takes precedence over the sheet.
    p.sheet.spectrum = spectrum(*a.table);
    p.table = a.table;
  }
  if (a.derived) {
    p.solvable = a.derived->solvable;
    p.derived_subgroup_order = a.derived->derived_subgroup_order();
  }
  return p;
}

inline GroupBlock block(const GroupAnalysis& a, std::optional<std::uint64_t> p = {}) {
  const CatalogEntry& e = *a.entry;
  GroupBlock b;
  b.name = e.sheet.name;
  b.description = e.description;
  b.factorization = e.sheet.order;
  b.order = e.sheet.order_value();
  b.spectrum = a.table ? spectrum(*a.table) : e.sheet.spectrum;
  b.source = a.table ? "enumeration" : "paper-data";
  b.table = a.table;
  if (a.table) b.nse = nse(*a.table);
  if (a.derived) {
    b.derived_series = a.derived->orders;
    b.solvable = a.derived->solvable;
  }
  b.notes = a.notes;
  if (p) {
    b.p = p;
    OrderPCount c = order_p_count(profile(a), *p);
    b.order_p_count = c.count;
    b.count_source = to_string(c.source);
    b.centralizer_order = c.centralizer;
    if (c.centralizer) b.centralizer_source = "spectrum rule";
    b.candidates = c.candidates;
    const bool applicable = std::binary_search(b.spectrum.begin(), b.spectrum.end(), *p) && valuation(b.order, *p) == 1;
    if (!c.centralizer && applicable && a.group) {
      // Spectrum rule does not apply; fall back to a brute-force centralizer.
      StabilizerChain chain = build_chain(*a.group);
      std::optional<Permutation> x;
      chain.for_each_element([&](const Permutation& g) {
        if (!x && element_order(g) == *p) x = g;
      });
      b.centralizer_order = centralizer_order(chain, *x);
      b.centralizer_source = "enumeration";
      b.candidates = sylow_count_candidates(b.order, *p, b.centralizer_order);
    }
  }
  return b;
}

namespace detail {

inline void add_data_checks(Report& r, const GroupAnalysis& a) {
  r.checks.insert(r.checks.end(), a.data_checks.begin(), a.data_checks.end());
}

inline bool any_data_failure(const std::vector<const GroupAnalysis*>& as) {
  return std::any_of(as.begin(), as.end(), [](const GroupAnalysis* a) { return !a->data_ok(); });
}

/// Enumerated count must lie among the Sylow-consistent candidates; a single candidate must match exactly.
inline void add_cross_check(Report& r, const GroupBlock& b) {
  if (!b.order_p_count || b.count_source != "enumeration" || b.candidates.empty()) return;
  bool member = std::any_of(b.candidates.begin(), b.candidates.end(),
                            [&](const SylowCountCandidate& c) { return c.count == *b.order_p_count; });
  bool exact = b.candidates.size() != 1 || b.candidates.front().count == *b.order_p_count;
  r.checks.push_back({b.name + " enumerated order-" + std::to_string(*b.p) + " count agrees with deduction",
                      member && exact, std::to_string(b.candidates.size()) + " candidate(s)"});
}

inline void add_witness(Report& r, const ConjectureCReport& w) {
  r.checks.push_back({"orders equal", w.orders_equal, {}});
  if (!w.orders_equal) return;
  r.checks.push_back({"order-" + std::to_string(w.p) + " counts determined",
                      w.counts[0].count.has_value() && w.counts[1].count.has_value(), w.reason});
  if (w.counts[0].count && w.counts[1].count) {
    r.checks.push_back({"order-" + std::to_string(w.p) + " counts equal", w.counts_equal,
                        w.counts[0].count->str() + " vs " + w.counts[1].count->str()});
  }
  r.checks.push_back({"non-isomorphism established", !w.distinctions.empty(), join(w.distinctions)});
}

inline Verdict combine(Verdict v, const Report& r, bool data_failure) {
  if (data_failure) return Verdict::data_contradiction;
  if (v == Verdict::confirmed && !r.all_checks_passed()) return Verdict::refuted;
  return v;
}

}  // namespace detail

/// Compares two catalog entries: equal orders, equal largest-prime counts, some distinguishing invariant.
inline Report verify_pair(const Catalog& catalog, const std::string& first, const std::string& second,
                          const HarnessOptions& opts, std::string scenario = {}) {
  Report r;
  r.scenario = scenario.empty() ? "pair " + first + " " + second : std::move(scenario);
  r.seed = opts.seed;
  GroupAnalysis a = analyze(catalog.at(first), opts);
  GroupAnalysis b = analyze(catalog.at(second), opts);
  ConjectureCReport w = conjecture_c_witness(profile(a), profile(b));
  std::optional<std::uint64_t> p;
  if (w.orders_equal) p = w.p;
  r.groups = {block(a, p), block(b, p)};
  detail::add_data_checks(r, a);
  detail::add_data_checks(r, b);
  for (const auto& g : r.groups) detail::add_cross_check(r, g);
  detail::add_witness(r, w);
  r.verdict = detail::combine(w.verdict, r, detail::any_data_failure({&a, &b}));
  r.summary = w.reason;
  return r;
}

inline Report scenario_ce1(const Catalog& c, const HarnessOptions& o) { return verify_pair(c, "A8", "L3_4", o, "ce1"); }

inline Report scenario_ce2(const Catalog& catalog, const HarnessOptions& opts) {
  Report r = verify_pair(catalog, "O7_3", "S6_3", opts, "ce2");
  for (const auto& g : r.groups) {
    r.checks.push_back({g.name + " deduced centralizer order is 13", g.centralizer_order == std::uint64_t{13},
                        g.centralizer_order ? std::to_string(*g.centralizer_order) : "undetermined"});
  }
  const bool same = r.groups[0].candidates == r.groups[1].candidates;
  r.checks.push_back({"candidate sets equal", same, std::to_string(r.groups[0].candidates.size()) + " candidate(s)"});
  if (same && r.groups[0].candidates.size() > 1) {
    r.summary = "equal counts forced only up to the candidate list; " + r.summary;
  }
  if (r.verdict == Verdict::confirmed && !r.all_checks_passed()) r.verdict = Verdict::refuted;
  return r;
}

inline Report scenario_ce3(const Catalog& catalog, const HarnessOptions& opts) {
  Report r = verify_pair(catalog, "L2_7", "F168", opts, "ce3");
  r.checks.push_back({"L2_7 is not solvable", r.groups[0].solvable == false, {}});
  r.checks.push_back({"F168 is solvable", r.groups[1].solvable == true, {}});
  if (r.verdict == Verdict::confirmed && !r.all_checks_passed()) r.verdict = Verdict::refuted;
  return r;
}

inline Report scenario_thompson(const Catalog& catalog, const HarnessOptions& opts) {
  Report r;
  r.scenario = "thompson";
  r.seed = opts.seed;
  GroupAnalysis a = analyze(catalog.at("2E4_A7"), opts);
  GroupAnalysis b = analyze(catalog.at("L3_4_2_2"), opts);
  r.groups = {block(a, 7), block(b, 7)};
  detail::add_data_checks(r, a);
  detail::add_data_checks(r, b);
  for (const auto& g : r.groups) detail::add_cross_check(r, g);

  r.checks.push_back({"same order type", same_order_type(*a.table, *b.table), "order-count tables identical"});
  const Spectrum expected_spectrum{1, 2, 3, 4, 5, 6, 7, 8, 14};
  for (const auto* g : {&a, &b}) {
    const std::string& n = g->entry->sheet.name;
    r.checks.push_back({n + " nse", nse(*g->table) == thompson_nse(), join(nse(*g->table))});
    r.checks.push_back({n + " spectrum", spectrum(*g->table) == expected_spectrum, join(spectrum(*g->table))});
  }
  const Integer da = a.derived->derived_subgroup_order();
  const Integer db = b.derived->derived_subgroup_order();
  r.checks.push_back({"2E4_A7 is perfect", da == 40320, "derived subgroup order " + da.str()});
  r.checks.push_back({"L3_4_2_2 has derived subgroup of index 2", db == 20160, "derived subgroup order " + db.str()});
  r.checks.push_back({"derived subgroup orders differ", da != db, da.str() + " vs " + db.str()});

  const bool data_failure = detail::any_data_failure({&a, &b});
  r.verdict = data_failure ? Verdict::data_contradiction
              : r.all_checks_passed() ? Verdict::confirmed
                                      : Verdict::refuted;
  r.summary = r.verdict == Verdict::confirmed ? "same order type, different composition factors" : "check failures";
  return r;
}

inline Report scenario_conj_e(const Catalog& catalog, const HarnessOptions& opts) {
  Report r;
  r.scenario = "conjE";
  r.seed = opts.seed;
  constexpr std::uint64_t p = 7;
  std::vector<ConjectureEReport> ws;
  bool data_failure = false;
  for (const std::string name : {"A8", "L3_4"}) {
    const CatalogEntry& e = catalog.at(name);
    GroupAnalysis a = analyze(e, opts);
    data_failure = data_failure || !a.data_ok();
    ConjectureEReport w = conjecture_e_witness(*a.group, p, e.psl2_field, opts.cap);
    GroupBlock b = block(a, p);
    b.center_order = w.center_order;
    b.generated_by_p_order = w.generated_order;
    r.groups.push_back(std::move(b));
    detail::add_data_checks(r, a);
    r.checks.push_back({name + " is generated by its elements of order 7", w.generated_by_p,
                        "subgroup order " + w.generated_order.str()});
    r.checks.push_back({name + " has trivial center", w.center_order == 1, std::to_string(w.center_order)});
    r.checks.push_back({name + " is not an excluded L2(Mersenne prime) case", !w.excluded_case, {}});
    ws.push_back(std::move(w));
  }
  r.checks.push_back({"order-7 counts equal", ws[0].order_p_count == ws[1].order_p_count,
                      std::to_string(ws[0].order_p_count) + " vs " + std::to_string(ws[1].order_p_count)});
  r.checks.push_back({"non-isomorphic (spectra differ)", r.groups[0].spectrum != r.groups[1].spectrum, {}});
  r.verdict = data_failure ? Verdict::data_contradiction
              : r.all_checks_passed() ? Verdict::confirmed
                                      : Verdict::refuted;
  r.summary = r.verdict == Verdict::confirmed ? "same order-7 count, both generated by order-7 elements, trivial centers"
                                              : "check failures";
  return r;
}

/// Scenario names in report order.
inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"ce1", "ce2", "ce3", "conjE", "thompson"};
  return names;
}

/// Runs one named scenario, timing it and converting expected failures into verdicts.
inline Report run_scenario(const std::string& name, const Catalog& catalog, const HarnessOptions& opts) {
  static const std::map<std::string, std::function<Report(const Catalog&, const HarnessOptions&)>> table{
      {"ce1", scenario_ce1}, {"ce2", scenario_ce2}, {"ce3", scenario_ce3},
      {"conjE", scenario_conj_e}, {"thompson", scenario_thompson}};
  auto it = table.find(name);
  if (it == table.end()) throw InvalidInput("unknown scenario: " + name);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = it->second(catalog, opts);
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::inconclusive;
    r.summary = e.what();
  } catch (const DataContradiction& e) {
    r.verdict = Verdict::data_contradiction;
    r.summary = e.what();
  }
  r.scenario = name;
  r.seed = opts.seed;
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Order, spectrum, nse and table for constructed entries; sheet data and deduction results otherwise.
inline Report stats_report(const Catalog& catalog, const std::string& name, const HarnessOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.scenario = "stats " + name;
  r.seed = opts.seed;
  const CatalogEntry& e = catalog.at(name);
  GroupAnalysis a = analyze(e, opts);
  std::optional<std::uint64_t> p;
  if (!e.sheet.order.empty()) p = largest_prime_divisor(e.sheet.order);
  r.groups.push_back(block(a, p));
  detail::add_data_checks(r, a);
  detail::add_cross_check(r, r.groups.front());
  r.verdict = a.data_ok() ? Verdict::confirmed : Verdict::data_contradiction;
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Exit code contract: 0 all confirmed, 1 any inconclusive or refuted, 2 data contradiction.
inline int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::data_contradiction) return 2;
    if (r.verdict != Verdict::confirmed) code = 1;
  }
  return code;
}

}  // namespace cgt
