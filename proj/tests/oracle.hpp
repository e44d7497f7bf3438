#pragma once

// Test-only reference computations. Nothing here touches stabilizer chains
// or the deduction engine: groups are closed by breadth-first search over
// right multiplication by generators, orders are found by repeated
// multiplication, and Sylow candidates by a plain loop over m.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cgt/perm.hpp"

namespace oracle {

using Images = std::vector<cgt::Point>;

inline Images images_of(const cgt::Permutation& p) { return Images(p.images().begin(), p.images().end()); }

inline Images multiply(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

/// All elements of <gens> by orbit of the identity under right multiplication.
inline std::set<Images> closure(const std::vector<cgt::Permutation>& gens) {
  const std::size_t n = gens.front().degree();
  Images id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<cgt::Point>(i);
  std::vector<Images> g;
  for (const auto& p : gens) g.push_back(images_of(p));
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& s : g) {
        Images y = multiply(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Order by multiplying until the identity comes back.
inline std::uint64_t order_by_powers(const Images& x) {
  Images id(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) id[i] = static_cast<cgt::Point>(i);
  Images y = x;
  std::uint64_t k = 1;
  while (y != id) {
    y = multiply(y, x);
    ++k;
  }
  return k;
}

inline std::map<std::uint64_t, std::uint64_t> order_counts(const std::set<Images>& elements) {
  std::map<std::uint64_t, std::uint64_t> m;
  for (const auto& x : elements) ++m[order_by_powers(x)];
  return m;
}

inline std::set<std::uint64_t> spectrum(const std::map<std::uint64_t, std::uint64_t>& counts) {
  std::set<std::uint64_t> s;
  for (const auto& [k, c] : counts) s.insert(k);
  return s;
}

struct Candidate {
  std::uint64_t m, n_p, count;
};

/// Every m in 1..p-1 dividing p-1 with n_p = |G| / (c m) an integer congruent to 1 mod p.
inline std::vector<Candidate> sylow_candidates(unsigned __int128 order, std::uint64_t p, std::uint64_t c) {
  std::vector<Candidate> out;
  for (std::uint64_t m = 1; m < p; ++m) {
    if ((p - 1) % m != 0) continue;
    unsigned __int128 normalizer = static_cast<unsigned __int128>(c) * m;
    if (order % normalizer != 0) continue;
    unsigned __int128 n = order / normalizer;
    if (n % p != 1) continue;
    out.push_back({m, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n * (p - 1))});
  }
  return out;
}

}  // namespace oracle
