#pragma once

/**
 * @file catalog.hpp
 * @brief Named group constructions and arithmetic-only fact sheets.
 *
 * Every construction uses the plainest available generators and is
 * certified after the fact by its computed order and spectrum; nothing
 * about the generators is trusted up front.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affine.hpp"
#include "arith.hpp"
#include "field.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "projective.hpp"
#include "random.hpp"
#include "stats.hpp"

namespace cgt {

enum class SheetSource { constructed, paper_data };

inline std::string to_string(SheetSource s) { return s == SheetSource::constructed ? "constructed" : "paper-data"; }

/// Arithmetic description of a group: order factorization and spectrum.
struct GroupFactSheet {
  std::string name;
  Factorization order;
  Spectrum spectrum;
  SheetSource source = SheetSource::paper_data;

  Integer order_value() const { return expand(order); }
};

/// Throws InvalidInput naming the violated invariant.
inline void validate_sheet(const GroupFactSheet& s) {
  if (s.name.empty()) throw InvalidInput("fact sheet has no name");
  validate_factorization(s.order);
  if (!std::is_sorted(s.spectrum.begin(), s.spectrum.end()) ||
      std::adjacent_find(s.spectrum.begin(), s.spectrum.end()) != s.spectrum.end())
    throw InvalidInput("spectrum of " + s.name + " must be strictly increasing");
  if (!divisor_closed(s.spectrum)) throw InvalidInput("spectrum of " + s.name + " is not divisor-closed");
  const Integer n = s.order_value();
  for (auto k : s.spectrum) {
    if (n % k != 0) throw InvalidInput("spectrum of " + s.name + " contains " + std::to_string(k) + ", which does not divide the order");
  }
}

/// Raised when a certified search or an oracle selection cannot produce a unique answer.
class DataContradiction : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Constructions

/// A_n on n points: <(0 1 2), n-cycle> for odd n, <(0 1 2), (1 2 ... n-1)> for even n.
inline GeneratedGroup alternating(unsigned n) {
  if (n < 3) throw InvalidInput("alternating: n must be >= 3");
  std::vector<int> cycle;
  for (unsigned i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cycle.push_back(static_cast<int>(i));
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (cycle.size() > 1) gens.push_back(Permutation::from_cycles(n, {cycle}));
  return make_group(n, gens, "A" + std::to_string(n));
}

inline std::uint64_t primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 1; g < p; ++g) {
    std::uint64_t x = g % p;
    std::uint64_t order = 1;
    while (x != 1) {
      x = x * g % p;
      ++order;
    }
    if (order == p - 1) return g;
  }
  throw InvalidInput("primitive_root: no generator found");
}

/// PSL(2, p) on GF(p) u {inf}; infinity is point p.
inline GeneratedGroup psl2(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw InvalidInput("psl2: p must be a prime >= 5");
  const std::uint64_t inf = p;
  const std::uint64_t lambda = primitive_root(p);
  const std::uint64_t square = lambda * lambda % p;
  auto inverse_mod = [p](std::uint64_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<Point> shift(p + 1), scale(p + 1), flip(p + 1);
  for (std::uint64_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>(x * square % p);
    flip[x] = static_cast<Point>(x == 0 ? inf : (p - inverse_mod(x)) % p);
  }
  shift[inf] = scale[inf] = static_cast<Point>(inf);
  flip[inf] = 0;
  return make_group(p + 1, {Permutation(shift), Permutation(scale), Permutation(flip)},
                    "L2(" + std::to_string(p) + ")");
}

using MatrixGF4 = Matrix<GF4, 3>;

/// Elementary transvections I + c E_ij (c in {1, w}) and diag(w, w^2, 1); they generate SL(3, 4).
inline std::vector<MatrixGF4> sl3_4_generators() {
  std::vector<MatrixGF4> gens;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j)
        for (unsigned c : {1u, 2u}) gens.push_back(MatrixGF4::transvection(i, j, GF4(c)));
  const GF4 w = GF4::generator();
  gens.push_back(MatrixGF4::diagonal({w, w * w, GF4::one()}));
  return gens;
}

inline const ProjectiveSpace<GF4, 3>& projective_plane_4() {
  static const ProjectiveSpace<GF4, 3> plane;
  return plane;
}

/// PSL(3, 4) on the 21 points of PG(2, 4).
inline GeneratedGroup psl3_4() {
  std::vector<Permutation> gens;
  for (const auto& m : sl3_4_generators()) gens.push_back(projective_action(projective_plane_4(), m));
  return make_group(21, gens, "L3(4)");
}

/// x -> a x^(2^i) + b on GF(8): [[2^3]7]3, order 168.
inline GeneratedGroup two_frobenius_168() {
  const GF8 g = GF8::generator();
  Gf2Matrix mul = Gf2Matrix::from_linear_map(3, [g](std::uint32_t x) { return (GF8(x) * g).value(); });
  Gf2Matrix frob = Gf2Matrix::from_linear_map(3, [](std::uint32_t x) { return GF8(x).frobenius().value(); });
  return affine_semidirect(3, {mul, frob}, "[[2^3]7]3");
}

/// GL(4, 2) on the 15 nonzero vectors, generated by the elementary transvections.
inline GeneratedGroup gl4_2_on_nonzero_vectors() {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      if (i == j) continue;
      Gf2Matrix t = Gf2Matrix::identity(4);
      std::vector<std::uint32_t> rows = t.rows();
      rows[i] ^= 1u << j;
      gens.push_back(nonzero_vector_action(Gf2Matrix(4, rows)));
    }
  }
  return make_group(15, gens, "GL(4,2)");
}

struct A7Search {
  GeneratedGroup group;  // 2^4 : A7 on 16 points
  Gf2Matrix a, b;        // generators of the linear A7
  std::uint64_t attempts = 0;
};

inline constexpr std::uint64_t kA7SearchBudget = 10'000;

/// Seeded search for a pair in GL(4, 2) generating a perfect group of
/// order 2520, then the affine extension by the natural module.
inline A7Search affine_2e4_a7(std::uint64_t seed) {
  const GeneratedGroup gl = gl4_2_on_nonzero_vectors();
  const StabilizerChain gl_chain = build_chain(gl);
  Rng rng(seed);
  for (std::uint64_t attempt = 1; attempt <= kA7SearchBudget; ++attempt) {
    Permutation x = gl_chain.random_element(rng);
    Permutation y = gl_chain.random_element(rng);
    GeneratedSubgroup h = generated_subgroup(15, {x, y});
    if (h.order != 2520) continue;
    GeneratedSubgroup d = derived_subgroup(make_group(15, {x, y}));
    if (d.order != 2520) continue;
    Gf2Matrix a = matrix_from_nonzero_action(4, x);
    Gf2Matrix b = matrix_from_nonzero_action(4, y);
    GeneratedGroup g = affine_semidirect(4, {a, b}, "2^4:A7");
    return {std::move(g), std::move(a), std::move(b), attempt};
  }
  throw DataContradiction("affine_2e4_a7: no perfect subgroup of order 2520 found within " +
                          std::to_string(kA7SearchBudget) + " pairs");
}

/// Expected nse of both order-40320 groups of the same-order-type pair.
inline NseMultiset thompson_nse() { return make_nse({1, 435, 2240, 6300, 8064, 6720, 5040, 5760}); }

struct ExtensionCandidate {
  OuterAutomorphism kind;
  GeneratedGroup group;
  OrderCountTable table;
};

/// The field, graph and graph-field extensions of L3(4), with their tables.
inline std::vector<ExtensionCandidate> l3_4_extensions() {
  std::vector<ExtensionCandidate> out;
  for (auto kind : {OuterAutomorphism::field, OuterAutomorphism::graph, OuterAutomorphism::graph_field}) {
    GeneratedGroup g = duality_extension(projective_plane_4(), sl3_4_generators(), kind, "L3(4):" + to_string(kind));
    OrderCountTable t = order_count_table(build_chain(g));
    out.push_back({kind, std::move(g), std::move(t)});
  }
  return out;
}

struct ExtensionMatch {
  GeneratedGroup group;
  OuterAutomorphism kind;
  std::vector<ExtensionCandidate> candidates;
};

/// The unique extension whose nse equals thompson_nse(); zero or
/// several matches are reported as a data contradiction.
inline ExtensionMatch l3_4_ext_2_2() {
  std::vector<ExtensionCandidate> candidates = l3_4_extensions();
  const ExtensionCandidate* match = nullptr;
  std::size_t matches = 0;
  for (const auto& c : candidates) {
    if (nse(c.table) == thompson_nse()) {
      match = &c;
      ++matches;
    }
  }
  if (matches != 1) {
    throw DataContradiction("l3_4_ext_2_2: " + std::to_string(matches) +
                            " of the three L3(4) extensions match the expected nse");
  }
  GeneratedGroup g = match->group;
  g.label = "L3(4):2_2";
  OuterAutomorphism kind = match->kind;
  return {std::move(g), kind, std::move(candidates)};
}

// ---------------------------------------------------------------------------
// Fact sheets and the built-in catalog

inline GroupFactSheet sheet(std::string name, Factorization f, Spectrum s, SheetSource src) {
  return {std::move(name), std::move(f), std::move(s), src};
}

/// O7(3) and S6(3), taken from printed data; too large to construct here.
inline std::vector<GroupFactSheet> fact_sheets_large() {
  const Factorization order{{2, 9}, {3, 9}, {5, 1}, {7, 1}, {13, 1}};
  Spectrum o7{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 18, 20};
  Spectrum s6 = o7;
  s6.insert(s6.end(), {24, 30, 36});
  return {sheet("O7_3", order, o7, SheetSource::paper_data), sheet("S6_3", order, s6, SheetSource::paper_data)};
}

/// Result of running a catalog builder.
struct Construction {
  GeneratedGroup group;
  std::vector<std::string> notes;  // how randomized or oracle-selected constructions were resolved
};

inline Construction plain(GeneratedGroup g) { return {std::move(g), {}}; }

/// A named catalog group. Constructed entries carry a builder; the
/// seed only matters for randomized constructions.
struct CatalogEntry {
  GroupFactSheet sheet;
  std::function<Construction(std::uint64_t seed)> construct;  // empty for arithmetic-only entries
  std::map<std::uint64_t, std::uint64_t> stated_counts;           // element counts given in the literature
  std::optional<NseMultiset> stated_nse;
  std::optional<std::uint64_t> psl2_field;  // q when the group is L2(q)
  std::string description;

  bool constructed() const { return static_cast<bool>(construct); }
};

inline Construction build_2e4_a7(std::uint64_t seed) {
  A7Search found = affine_2e4_a7(seed);
  return {std::move(found.group),
          {"linear A7 found after " + std::to_string(found.attempts) + " random pair(s) with seed " +
           std::to_string(seed)}};
}

inline Construction build_l3_4_2_2(std::uint64_t) {
  ExtensionMatch match = l3_4_ext_2_2();
  std::vector<std::string> notes{"nse oracle selected the " + to_string(match.kind) + " extension"};
  for (const auto& c : match.candidates)
    notes.push_back(to_string(c.kind) + " extension: nse {" + join(nse(c.table)) + "}");
  return {std::move(match.group), std::move(notes)};
}

class Catalog {
public:
  static Catalog builtin() {
    Catalog c;
    const Factorization order_20160{{2, 6}, {3, 2}, {5, 1}, {7, 1}};
    const Factorization order_168{{2, 3}, {3, 1}, {7, 1}};
    const Factorization order_40320{{2, 7}, {3, 2}, {5, 1}, {7, 1}};
    const auto C = SheetSource::constructed;

    c.add({sheet("A7", {{2, 3}, {3, 2}, {5, 1}, {7, 1}}, {1, 2, 3, 4, 5, 6, 7}, C),
           [](std::uint64_t) { return plain(alternating(7)); }, {}, {}, {}, "alternating group of degree 7"});
    c.add({sheet("A8", order_20160, {1, 2, 3, 4, 5, 6, 7, 15}, C), [](std::uint64_t) { return plain(alternating(8)); },
           {{7, 5760}}, {}, {}, "alternating group of degree 8 (= L4(2))"});
    c.add({sheet("L3_4", order_20160, {1, 2, 3, 4, 5, 7}, C), [](std::uint64_t) { return plain(psl3_4()); },
           {{7, 5760}}, {}, {}, "PSL(3,4) on the 21 points of PG(2,4)"});
    c.add({sheet("L2_7", order_168, {1, 2, 3, 4, 7}, C), [](std::uint64_t) { return plain(psl2(7)); }, {{7, 48}}, {}, 7,
           "PSL(2,7) on the projective line over GF(7)"});
    c.add({sheet("L2_5", {{2, 2}, {3, 1}, {5, 1}}, {1, 2, 3, 5}, C), [](std::uint64_t) { return plain(psl2(5)); }, {}, {},
           5, "PSL(2,5) on the projective line over GF(5)"});
    c.add({sheet("F168", order_168, {1, 2, 3, 6, 7}, C), [](std::uint64_t) { return plain(two_frobenius_168()); },
           {{7, 48}}, {}, {}, "2-Frobenius group [[2^3]7]3 = AGammaL(1,8)"});
    c.add({sheet("2E4_A7", order_40320, {1, 2, 3, 4, 5, 6, 7, 8, 14}, C),
           build_2e4_a7, {{7, 5760}}, thompson_nse(), {},
           "2^4:A7, affine extension of a linear A7 < GL(4,2)"});
    c.add({sheet("L3_4_2_2", order_40320, {1, 2, 3, 4, 5, 6, 7, 8, 14}, C),
           build_l3_4_2_2, {{7, 5760}}, thompson_nse(), {},
           "L3(4):2_2, the index-2 extension selected by its nse"});
    for (auto& s : fact_sheets_large()) c.add({s, {}, {}, {}, {}, "arithmetic-only (printed order and spectrum)"});
    return c;
  }

  /// Adds an entry; rejects duplicates and invalid sheets.
  void add(CatalogEntry e) {
    validate_sheet(e.sheet);
    if (entries_.contains(e.sheet.name)) throw InvalidInput("catalog already has an entry named " + e.sheet.name);
    names_.push_back(e.sheet.name);
    entries_.emplace(e.sheet.name, std::move(e));
  }

  void add_sheet(GroupFactSheet s) { add({std::move(s), {}, {}, {}, {}, "ingested fact sheet"}); }

  bool contains(const std::string& name) const { return entries_.contains(name); }

  const CatalogEntry& at(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw InvalidInput("unknown catalog entry: " + name);
    return it->second;
  }

  /// Names in insertion order.
  const std::vector<std::string>& names() const noexcept { return names_; }

private:
  std::map<std::string, CatalogEntry> entries_;
  std::vector<std::string> names_;
};

}  // namespace cgt
