#pragma once

/**
 * @file stats.hpp
 * @brief Element-order statistics: order-count tables, the spectrum
 * (set of element orders), nse (the set {m_k : k in the spectrum}), the
 * largest element orders and the same-order-type relation.
 *
 * nse collapses repeated counts: when two orders have the same number of
 * elements the value appears once.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "chain.hpp"
#include "perm.hpp"

namespace cgt {

/// Number of elements of each order; keys iterate in increasing order.
struct OrderCountTable {
  std::uint64_t group_order = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }

  friend bool operator==(const OrderCountTable&, const OrderCountTable&) = default;
};

using Spectrum = std::vector<std::uint64_t>;     // sorted ascending, no repeats
using NseMultiset = std::vector<std::uint64_t>;  // sorted ascending, no repeats

/// Exact table by full enumeration. Work is split over the outermost
/// transversal level; per-partition tallies are summed in partition order.
inline OrderCountTable order_count_table(const StabilizerChain& chain, std::uint64_t cap = kDefaultEnumerationCap,
                                         unsigned threads = 0) {
  chain.require_within(cap);
  const std::size_t width = chain.top_width();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, width));

  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(threads);
  auto work = [&](unsigned t) {
    const std::size_t begin = width * t / threads;
    const std::size_t end = width * (t + 1) / threads;
    chain.for_each_element_in(begin, end, [&](const Permutation& x) { ++partial[t][element_order(x)]; });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  OrderCountTable table;
  table.group_order = chain.order().convert_to<std::uint64_t>();
  for (const auto& part : partial) {
    for (const auto& [k, m] : part) table.counts[k] += m;
  }
  return table;
}

inline Spectrum spectrum(const OrderCountTable& t) {
  Spectrum s;
  for (const auto& [k, m] : t.counts) {
    if (m > 0) s.push_back(k);
  }
  return s;
}

inline NseMultiset nse(const OrderCountTable& t) {
  NseMultiset out;
  for (const auto& [k, m] : t.counts) {
    if (m > 0) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline NseMultiset make_nse(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

/// The j largest element orders, descending.
inline std::vector<std::uint64_t> top_orders(const Spectrum& s, std::size_t j) {
  if (j == 0 || j > s.size()) {
    throw InvalidInput("top_orders: asked for " + std::to_string(j) + " orders from a spectrum of size " +
                       std::to_string(s.size()));
  }
  return std::vector<std::uint64_t>(s.rbegin(), s.rbegin() + static_cast<std::ptrdiff_t>(j));
}

inline std::uint64_t largest_prime_divisor(const Factorization& f) {
  validate_factorization(f);
  if (f.empty()) throw InvalidInput("largest_prime_divisor: the trivial order has no prime divisor");
  return f.back().prime;
}

inline bool same_order_type(const OrderCountTable& a, const OrderCountTable& b) {
  auto nonzero = [](const OrderCountTable& t) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (const auto& [k, c] : t.counts) {
      if (c) m.emplace(k, c);
    }
    return m;
  };
  return a.group_order == b.group_order && nonzero(a) == nonzero(b);
}

/// Checks the structural invariants of a table; returns the first violation, or empty.
inline std::string table_violation(const OrderCountTable& t) {
  std::uint64_t total = 0;
  for (const auto& [k, m] : t.counts) {
    total += m;
    if (m == 0) continue;
    if (k == 0 || t.group_order % k != 0)
      return "order " + std::to_string(k) + " does not divide " + std::to_string(t.group_order);
    if (m % euler_phi(k) != 0) return "phi(" + std::to_string(k) + ") does not divide m_" + std::to_string(k);
  }
  if (t.count(1) != 1) return "m_1 must be 1";
  if (total != t.group_order) return "counts sum to " + std::to_string(total) + ", not the group order";
  return {};
}

/// Frobenius' theorem: n divides #{x : x^n = 1} for every n dividing |G|.
/// Returns the first n where this fails, or 0.
inline std::uint64_t frobenius_divisibility_failure(const OrderCountTable& t) {
  for (std::uint64_t n : divisors(t.group_order)) {
    std::uint64_t solutions = 0;
    for (const auto& [k, m] : t.counts) {
      if (n % k == 0) solutions += m;
    }
    if (solutions % n != 0) return n;
  }
  return 0;
}

/// Every divisor of a member is a member, and 1 is present.
inline bool divisor_closed(const Spectrum& s) {
  std::set<std::uint64_t> members(s.begin(), s.end());
  if (!members.contains(1)) return false;
  for (auto k : s) {
    for (auto d : divisors(k)) {
      if (!members.contains(d)) return false;
    }
  }
  return true;
}

}  // namespace cgt
