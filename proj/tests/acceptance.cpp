// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cgt/scenarios.hpp"

namespace {

// Wall-clock limits in milliseconds.
constexpr double kCe1LimitMs = 5000;
constexpr double kCe3LimitMs = 1000;
constexpr double kThompsonLimitMs = 15000;
constexpr double kCe2LimitMs = 10;
constexpr double kConjELimitMs = 5000;
constexpr double kPropertyLimitMs = 60000;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const cgt::GroupBlock* find_group(const cgt::Report& r, const std::string& name) {
  for (const auto& g : r.groups) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::uint64_t count_of(const cgt::GroupBlock* g, std::uint64_t k) { return g && g->table ? g->table->count(k) : 0; }

void timing(Outcome& o, const cgt::Report& r, double limit) {
  o.detail << " " << r.duration_ms << " ms (limit " << limit << ")";
  o.require(r.duration_ms < limit, "runtime");
}

Outcome ce1(const cgt::Catalog& c) {
  Outcome o;
  auto r = cgt::run_scenario("ce1", c, {});
  auto* a8 = find_group(r, "A8");
  auto* l34 = find_group(r, "L3_4");
  o.require(a8 && l34, "groups present");
  if (!o.passed) return o;
  o.require(a8->table->group_order == 20160 && l34->table->group_order == 20160, "orders 20160");
  o.require(count_of(a8, 7) == 5760 && count_of(l34, 7) == 5760, "order-7 counts 5760");
  o.require(a8->spectrum == cgt::Spectrum{1, 2, 3, 4, 5, 6, 7, 15}, "A8 spectrum");
  o.require(l34->spectrum == cgt::Spectrum{1, 2, 3, 4, 5, 7}, "L3_4 spectrum");
  o.require(r.verdict == cgt::Verdict::confirmed, "verdict");
  timing(o, r, kCe1LimitMs);
  return o;
}

Outcome ce3(const cgt::Catalog& c) {
  Outcome o;
  auto r = cgt::run_scenario("ce3", c, {});
  auto* l27 = find_group(r, "L2_7");
  auto* f168 = find_group(r, "F168");
  o.require(l27 && f168, "groups present");
  if (!o.passed) return o;
  o.require(l27->table->group_order == 168 && f168->table->group_order == 168, "orders 168");
  o.require(count_of(l27, 7) == 48 && count_of(f168, 7) == 48, "order-7 counts 48");
  o.require(l27->solvable == false && f168->solvable == true, "solvability");
  o.require(r.verdict == cgt::Verdict::confirmed, "verdict");
  timing(o, r, kCe3LimitMs);
  return o;
}

Outcome thompson(const cgt::Catalog& c) {
  Outcome o;
  auto r = cgt::run_scenario("thompson", c, {});
  auto* a = find_group(r, "2E4_A7");
  auto* b = find_group(r, "L3_4_2_2");
  o.require(a && b && a->table && b->table, "groups present");
  if (!o.passed) return o;
  o.require(a->table->group_order == 40320 && b->table->group_order == 40320, "orders 40320");
  o.require(cgt::same_order_type(*a->table, *b->table), "same order type");
  const cgt::NseMultiset want = cgt::make_nse({1, 435, 2240, 6300, 8064, 6720, 5040, 5760});
  o.require(a->nse == want && b->nse == want, "nse");
  const cgt::Spectrum spec{1, 2, 3, 4, 5, 6, 7, 8, 14};
  o.require(a->spectrum == spec && b->spectrum == spec, "spectrum");
  o.require(a->derived_series.size() >= 2 && a->derived_series[1] == 40320, "2E4_A7 perfect");
  o.require(b->derived_series.size() >= 2 && b->derived_series[1] == 20160, "L3_4_2_2 derived order 20160");
  o.require(r.verdict == cgt::Verdict::confirmed, "verdict");
  timing(o, r, kThompsonLimitMs);
  return o;
}

Outcome ce2(const cgt::Catalog& c) {
  Outcome o;
  auto r = cgt::run_scenario("ce2", c, {});
  auto* a = find_group(r, "O7_3");
  auto* b = find_group(r, "S6_3");
  o.require(a && b, "groups present");
  if (!o.passed) return o;
  o.require(!a->table && !b->table, "deduction path only");
  o.require(a->centralizer_order == 13u && b->centralizer_order == 13u, "centralizer 13");
  o.require(a->candidates == b->candidates, "same candidate set");
  const bool singleton = a->candidates.size() == 1;
  o.require(r.verdict == (singleton ? cgt::Verdict::confirmed : cgt::Verdict::inconclusive), "verdict");
  if (singleton) o.detail << " count " << a->candidates.front().count;
  timing(o, r, kCe2LimitMs);
  return o;
}

Outcome conj_e(const cgt::Catalog& c) {
  Outcome o;
  auto r = cgt::run_scenario("conjE", c, {});
  o.require(r.groups.size() == 2, "groups present");
  if (!o.passed) return o;
  for (const auto& g : r.groups) {
    o.require(g.generated_by_p_order && *g.generated_by_p_order == g.order, g.name + " generated by order-7 elements");
    o.require(g.center_order == 1u, g.name + " center trivial");
  }
  o.require(count_of(&r.groups[0], 7) == count_of(&r.groups[1], 7), "counts equal");
  o.require(r.verdict == cgt::Verdict::confirmed, "verdict");
  timing(o, r, kConjELimitMs);
  return o;
}

struct PrimeCase {
  const char* group;
  std::uint64_t p;
};

Outcome cross_check(const cgt::Catalog& c) {
  Outcome o;
  const std::vector<PrimeCase> cases{{"A8", 7}, {"L3_4", 7}, {"L2_7", 7}, {"F168", 7}, {"2E4_A7", 7}, {"L3_4_2_2", 7}};
  for (const auto& [name, p] : cases) {
    auto a = cgt::analyze(c.at(name), {});
    auto b = cgt::block(a, p);
    const std::uint64_t m = a.table->count(p);
    bool member = false;
    for (const auto& cand : b.candidates) member = member || cand.count == m;
    o.require(!b.candidates.empty(), std::string(name) + " candidates");
    o.require(member, std::string(name) + " count in candidates");
    if (b.candidates.size() == 1) o.require(b.candidates.front().count == m, std::string(name) + " singleton");
    o.detail << " " << name << ":" << m << "/" << b.candidates.size() << "(" << b.centralizer_source << ")";
  }
  return o;
}

Outcome properties(const cgt::Catalog& c) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : c.names()) {
    const auto& e = c.at(name);
    if (!e.constructed()) continue;
    auto chain = cgt::build_chain(e.construct(1).group);
    auto t = cgt::order_count_table(chain);
    std::uint64_t n = 0;
    chain.for_each_element([&](const cgt::Permutation&) { ++n; });
    o.require(cgt::table_violation(t).empty(), name + " table invariants");
    o.require(cgt::frobenius_divisibility_failure(t) == 0, name + " Frobenius divisibility");
    o.require(cgt::Integer(n) == chain.order(), name + " enumeration cardinality");
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  o.detail << " " << ms << " ms (limit " << kPropertyLimitMs << ")";
  o.require(ms < kPropertyLimitMs, "runtime");
  return o;
}

}  // namespace

int main() {
  const cgt::Catalog catalog = cgt::Catalog::builtin();
  const std::vector<std::pair<std::string, std::function<Outcome(const cgt::Catalog&)>>> criteria{
      {"1 ce1: A8 vs L3(4)", ce1},
      {"2 ce3: L2(7) vs 2-Frobenius 168", ce3},
      {"3 thompson: 2^4:A7 vs L3(4):2_2", thompson},
      {"4 ce2: O7(3) vs S6(3) by deduction", ce2},
      {"5 conjE: generation by order-7 elements", conj_e},
      {"6 deduction/enumeration cross-check", cross_check},
      {"7 table properties on constructed groups", properties},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn(catalog);
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << ":" << o.detail.str() << std::endl;
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criterion(s) failed" : "acceptance: all passed")
            << std::endl;
  return failures ? 1 : 0;
}
