#pragma once

/**
 * @file deduction.hpp
 * @brief Counting elements of prime order p from arithmetic data alone.
 *
 * For an element a of prime order p with p exactly dividing |G|, the
 * Sylow p-subgroups are the cyclic groups <a>, pairwise intersecting
 * trivially, so G has (p - 1) n_p elements of order p. With
 * m = |N(<a>) : C(<a>)|, m divides p - 1 (N/C embeds in Aut(<a>)),
 * n_p = |G| / (|C(<a>)| m), and n_p = 1 (mod p). Enumerating the divisors
 * m of p - 1 gives every count consistent with these constraints.
 *
 * |C(<a>)| = p can be read off the spectrum: if no multiple of p other
 * than p is an element order, no element of order q != p commutes with a,
 * so C(<a>) is a p-group, and it has order p because p^2 does not divide |G|.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "catalog.hpp"
#include "group.hpp"
#include "stats.hpp"

namespace cgt {

enum class Verdict { confirmed, inconclusive, refuted, data_contradiction };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::refuted: return "refuted";
    case Verdict::data_contradiction: return "data-contradiction";
  }
  return "?";
}

struct SylowCountCandidate {
  std::uint64_t m = 0;  // |N(<a>) : C(<a>)|
  Integer n_p;          // number of Sylow p-subgroups
  Integer count;        // (p - 1) n_p elements of order p

  friend bool operator==(const SylowCountCandidate&, const SylowCountCandidate&) = default;
};

/// p when the spectrum forces |C(<a>)| = p for a of order p, otherwise nullopt.
inline std::optional<std::uint64_t> deduce_centralizer_order(const Factorization& order, std::uint64_t p,
                                                             const Spectrum& spectrum) {
  if (!is_prime(p)) throw InvalidInput("deduce_centralizer_order: " + std::to_string(p) + " is not prime");
  if (!std::binary_search(spectrum.begin(), spectrum.end(), p))
    throw InvalidInput("deduce_centralizer_order: " + std::to_string(p) + " is not an element order");
  const unsigned e = valuation(expand(order), p);
  if (e == 0) throw InvalidInput("deduce_centralizer_order: " + std::to_string(p) + " does not divide the order");
  if (e != 1) return std::nullopt;
  for (auto k : spectrum) {
    if (k != p && k % p == 0) return std::nullopt;
  }
  return p;
}

/// Every (m, n_p, count) consistent with the constraints above, in increasing m.
inline std::vector<SylowCountCandidate> sylow_count_candidates(const Integer& group_order, std::uint64_t p,
                                                               std::optional<std::uint64_t> centralizer = {}) {
  if (!is_prime(p)) throw InvalidInput("sylow_count_candidates: " + std::to_string(p) + " is not prime");
  const unsigned e = valuation(group_order, p);
  if (e == 0) throw InvalidInput("sylow_count_candidates: p does not divide the group order");
  if (e > 1) throw InvalidInput("sylow_count_candidates: p^2 divides the group order; the argument does not apply");
  const std::uint64_t c = centralizer.value_or(p);
  if (c % p != 0 || group_order % c != 0)
    throw InvalidInput("sylow_count_candidates: centralizer order must be a multiple of p dividing |G|");

  std::vector<SylowCountCandidate> out;
  for (std::uint64_t m : divisors(p - 1)) {
    Integer normalizer = Integer(c) * m;
    if (group_order % normalizer != 0) continue;
    Integer n_p = group_order / normalizer;
    if (n_p % p != 1) continue;
    out.push_back({m, n_p, n_p * (p - 1)});
  }
  return out;
}

/// Arithmetic and (when available) enumerated facts about one group.
struct GroupProfile {
  GroupFactSheet sheet;
  std::optional<OrderCountTable> table;
  std::optional<bool> solvable;
  std::optional<Integer> derived_subgroup_order;
};

enum class CountSource { enumeration, deduction, none };

inline std::string to_string(CountSource s) {
  switch (s) {
    case CountSource::enumeration: return "enumeration";
    case CountSource::deduction: return "deduction";
    case CountSource::none: return "none";
  }
  return "?";
}

struct OrderPCount {
  std::optional<Integer> count;
  CountSource source = CountSource::none;
  std::optional<std::uint64_t> centralizer;      // deduced |C(<a>)|
  std::vector<SylowCountCandidate> candidates;   // empty when deduction did not apply
};

struct ConjectureCReport {
  std::string first, second;
  bool orders_equal = false;
  std::uint64_t p = 0;
  std::array<OrderPCount, 2> counts;
  bool counts_equal = false;
  std::vector<std::string> distinctions;  // computable invariants that differ
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
};

inline OrderPCount order_p_count(const GroupProfile& g, std::uint64_t p) {
  OrderPCount out;
  if (std::binary_search(g.sheet.spectrum.begin(), g.sheet.spectrum.end(), p) &&
      valuation(g.sheet.order_value(), p) == 1) {
    out.centralizer = deduce_centralizer_order(g.sheet.order, p, g.sheet.spectrum);
    if (out.centralizer) out.candidates = sylow_count_candidates(g.sheet.order_value(), p, out.centralizer);
  }
  if (g.table) {
    out.count = Integer(g.table->count(p));
    out.source = CountSource::enumeration;
  } else if (out.candidates.size() == 1) {
    out.count = out.candidates.front().count;
    out.source = CountSource::deduction;
  }
  return out;
}

/// Checks that (first, second) have equal orders, equal numbers of elements
/// of the largest prime order, and differ in some computable invariant.
inline ConjectureCReport conjecture_c_witness(const GroupProfile& first, const GroupProfile& second) {
  ConjectureCReport r;
  r.first = first.sheet.name;
  r.second = second.sheet.name;
  r.orders_equal = first.sheet.order_value() == second.sheet.order_value();
  if (!r.orders_equal) {
    r.verdict = Verdict::refuted;
    r.reason = "group orders differ";
    return r;
  }
  r.p = largest_prime_divisor(first.sheet.order);
  r.counts = {order_p_count(first, r.p), order_p_count(second, r.p)};

  if (first.sheet.spectrum != second.sheet.spectrum) r.distinctions.push_back("spectra differ");
  if (first.solvable && second.solvable && *first.solvable != *second.solvable)
    r.distinctions.push_back("solvability differs");
  if (first.derived_subgroup_order && second.derived_subgroup_order &&
      *first.derived_subgroup_order != *second.derived_subgroup_order)
    r.distinctions.push_back("derived subgroup orders differ");

  for (const auto& c : r.counts) {
    if (!c.count) {
      r.verdict = Verdict::inconclusive;
      r.reason = c.candidates.empty() ? "order-p count undetermined"
                                      : "order-p count not unique: " + std::to_string(c.candidates.size()) +
                                            " Sylow-consistent candidates";
      if (r.counts[0].candidates == r.counts[1].candidates && !c.candidates.empty())
        r.reason += " (identical candidate sets)";
      return r;
    }
  }
  r.counts_equal = *r.counts[0].count == *r.counts[1].count;
  if (!r.counts_equal) {
    r.verdict = Verdict::refuted;
    r.reason = "order-p counts differ";
  } else if (r.distinctions.empty()) {
    r.verdict = Verdict::inconclusive;
    r.reason = "no computable invariant separates the two groups";
  } else {
    r.verdict = Verdict::confirmed;
    r.reason = "equal orders and order-p counts, non-isomorphic";
  }
  return r;
}

inline bool is_mersenne_prime(std::uint64_t q) { return is_prime(q) && ((q + 1) & q) == 0; }

struct ConjectureEReport {
  std::string name;
  std::uint64_t p = 0;
  Integer group_order;
  std::uint64_t order_p_count = 0;
  Integer generated_order;  // order of the subgroup generated by all elements of order p
  bool generated_by_p = false;
  std::uint64_t center_order = 0;
  bool excluded_case = false;  // L2(q), q a Mersenne prime
};

/// Facts that decide whether g meets the hypotheses of the generation conjecture at p.
inline ConjectureEReport conjecture_e_witness(const GeneratedGroup& g, std::uint64_t p,
                                              std::optional<std::uint64_t> psl2_field = {},
                                              std::uint64_t cap = kDefaultEnumerationCap) {
  ConjectureEReport r;
  r.name = g.label;
  r.p = p;
  StabilizerChain chain = build_chain(g);
  chain.require_within(cap);
  r.group_order = chain.order();
  std::vector<Permutation> elems = elements_of_order(chain, p, cap);
  r.order_p_count = elems.size();
  r.generated_order = elems.empty() ? Integer(1) : generated_subgroup(g.degree, elems).order;
  r.generated_by_p = r.generated_order == r.group_order;
  r.center_order = center_order(g, cap);
  r.excluded_case = psl2_field && is_mersenne_prime(*psl2_field);
  return r;
}

}  // namespace cgt
