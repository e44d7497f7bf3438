#pragma once

// Finitely generated permutation groups and the operations built on their
// stabilizer chains: enumeration, generated subgroups, derived series,
// center, elements of a given order.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "perm.hpp"
#include "random.hpp"

namespace cgt {

struct GeneratedGroup {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::string label;
};

/// Validates degrees, drops duplicates and identities (keeping one identity
/// when nothing else is left).
inline GeneratedGroup make_group(std::size_t degree, const std::vector<Permutation>& gens, std::string label = {}) {
  if (degree == 0) throw InvalidInput("group degree must be >= 1");
  if (gens.empty()) throw InvalidInput("a group needs at least one generator");
  GeneratedGroup g{degree, {}, std::move(label)};
  std::unordered_set<Permutation> seen;
  for (const auto& p : gens) {
    if (p.degree() != degree) throw InvalidInput("generator degree mismatch in " + g.label);
    if (p.is_identity()) continue;
    if (seen.insert(p).second) g.generators.push_back(p);
  }
  if (g.generators.empty()) g.generators.push_back(Permutation(degree));
  return g;
}

/// Deterministic for a given seed; a nonzero seed shuffles the generator
/// insertion order, which changes the base and strong generators but never
/// the group.
inline StabilizerChain build_chain(const GeneratedGroup& g, std::uint64_t seed = 0) {
  StabilizerChain chain(g.degree);
  std::vector<Permutation> gens = g.generators;
  if (seed != 0) {
    Rng rng(seed);
    for (std::size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[uniform_index(rng, i)]);
  }
  for (const auto& p : gens) chain.extend(p);
  return chain;
}

inline Integer group_order(const StabilizerChain& c) { return c.order(); }

inline bool contains(const StabilizerChain& c, const Permutation& p) { return c.contains(p); }

inline std::vector<Permutation> enumerate(const StabilizerChain& c, std::uint64_t cap = kDefaultEnumerationCap) {
  c.require_within(cap);
  std::vector<Permutation> out;
  out.reserve(c.order().convert_to<std::size_t>());
  c.for_each_element([&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

inline Permutation random_element(const StabilizerChain& c, Rng& rng) { return c.random_element(rng); }

struct GeneratedSubgroup {
  GeneratedGroup group;  // only the generators that enlarged the subgroup are kept
  StabilizerChain chain;
  Integer order;
};

inline GeneratedSubgroup generated_subgroup(std::size_t degree, const std::vector<Permutation>& gens,
                                            std::string label = {}) {
  if (gens.empty()) throw InvalidInput("generated_subgroup: no generators");
  StabilizerChain chain(degree);
  std::vector<Permutation> kept;
  for (const auto& p : gens) {
    if (p.degree() != degree) throw InvalidInput("generated_subgroup: degree mismatch");
    if (chain.extend(p)) kept.push_back(p);
  }
  if (kept.empty()) kept.push_back(Permutation(degree));
  Integer order = chain.order();
  return {GeneratedGroup{degree, std::move(kept), std::move(label)}, std::move(chain), std::move(order)};
}

/// Smallest subgroup of the group generated by `ambient` that contains
/// `seeds` and is normalized by every ambient generator.
inline GeneratedSubgroup normal_closure(std::size_t degree, const std::vector<Permutation>& ambient,
                                        const std::vector<Permutation>& seeds, std::string label = {}) {
  StabilizerChain chain(degree);
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (chain.extend(s)) gens.push_back(s);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& a : ambient) {
      Permutation x = conjugate(gens[i], a);
      if (chain.extend(x)) gens.push_back(std::move(x));
    }
  }
  if (gens.empty()) gens.push_back(Permutation(degree));
  Integer order = chain.order();
  return {GeneratedGroup{degree, std::move(gens), std::move(label)}, std::move(chain), std::move(order)};
}

/// [G, G]: normal closure of the commutators of generator pairs.
inline GeneratedSubgroup derived_subgroup(const GeneratedGroup& g) {
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
      comms.push_back(commutator(g.generators[i], g.generators[j]));
    }
  }
  return normal_closure(g.degree, g.generators, comms, "[" + g.label + ", " + g.label + "]");
}

struct DerivedSeries {
  std::vector<Integer> orders;  // |G| = d0 >= d1 >= ... down to 1 or to the stable term
  bool solvable = false;

  /// |G'|; equals |G| exactly when G is perfect.
  Integer derived_subgroup_order() const { return orders.size() > 1 ? orders[1] : orders.front(); }
  bool perfect() const { return derived_subgroup_order() == orders.front(); }
};

inline DerivedSeries derived_series(const GeneratedGroup& g) {
  DerivedSeries s;
  GeneratedGroup current = g;
  Integer order = build_chain(current).order();
  s.orders.push_back(order);
  while (order != 1) {
    GeneratedSubgroup next = derived_subgroup(current);
    s.orders.push_back(next.order);
    if (next.order == order) break;
    order = next.order;
    current = std::move(next.group);
  }
  s.solvable = (s.orders.back() == 1);
  return s;
}

/// |Z(G)| by brute force over the enumeration.
inline std::uint64_t center_order(const GeneratedGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  StabilizerChain chain = build_chain(g);
  std::uint64_t count = 0;
  chain.for_each_element(
      [&](const Permutation& x) {
        for (const auto& s : g.generators) {
          if (x * s != s * x) return;
        }
        ++count;
      },
      cap);
  return count;
}

/// |C_G(a)| by brute force over the enumeration.
inline std::uint64_t centralizer_order(const StabilizerChain& c, const Permutation& a,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  std::uint64_t count = 0;
  c.for_each_element([&](const Permutation& x) { count += (x * a == a * x); }, cap);
  return count;
}

inline std::vector<Permutation> elements_of_order(const StabilizerChain& c, std::uint64_t k,
                                                  std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> out;
  c.for_each_element(
      [&](const Permutation& x) {
        if (element_order(x) == k) out.push_back(x);
      },
      cap);
  return out;
}

}  // namespace cgt
