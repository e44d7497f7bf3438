#pragma once

/**
 * @file chain.hpp
 * @brief Stabilizer chains (base and strong generating sets) built by
 * deterministic Schreier-Sims.
 *
 * Level i of the chain belongs to the base point b_i and holds the strong
 * generators fixing b_0..b_{i-1}, the fundamental orbit of b_i under them,
 * and a transversal: for every orbit point x a coset representative u_x
 * with b_i^{u_x} = x. Every group element factors uniquely as
 * u_{k-1} * ... * u_1 * u_0 (left factor acting first).
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "perm.hpp"
#include "random.hpp"

namespace cgt {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Refusal to enumerate a group larger than the caller's cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const Integer& order, std::uint64_t cap)
      : std::runtime_error("group of order " + order.str() + " exceeds the enumeration cap of " +
                           std::to_string(cap) + "; use the deduction engine instead"),
        order_(order),
        cap_(cap) {}

  const Integer& order() const noexcept { return order_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  Integer order_;
  std::uint64_t cap_;
};

class StabilizerChain {
public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;              // BFS order, orbit[0] == base
    std::vector<int> orbit_index;          // point -> position in orbit, -1 if absent
    std::vector<Permutation> transversal;  // aligned with orbit
    std::vector<Permutation> inverse_transversal;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped; depth() if it ran through
  };

  explicit StabilizerChain(std::size_t degree) : degree_(degree), identity_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_.at(i); }
  const Permutation& identity() const noexcept { return identity_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  /// Strong generating set (the generators of level 0).
  std::vector<Permutation> strong_generators() const {
    return levels_.empty() ? std::vector<Permutation>{} : levels_.front().generators;
  }

  Integer order() const {
    Integer n = 1;
    for (const auto& l : levels_) n *= l.orbit.size();
    return n;
  }

  SiftResult sift(Permutation g, std::size_t from = 0) const {
    check_degree(g);
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& l = levels_[i];
      int idx = l.orbit_index[g[l.base]];
      if (idx < 0) return {std::move(g), i};
      g = g * l.inverse_transversal[idx];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const { return sift(g).residue.is_identity(); }

  /// Adds g to the group. Returns false when g was already a member.
  bool extend(const Permutation& g) {
    auto [residue, j] = sift(g);
    if (residue.is_identity()) return false;
    add_strong_generator(residue, 0, j);
    complete(j);
    return true;
  }

  /// Uniform random element: one uniformly chosen coset representative per level.
  Permutation random_element(Rng& rng) const {
    Permutation g = identity_;
    for (std::size_t i = levels_.size(); i-- > 0;) {
      const Level& l = levels_[i];
      g = g * l.transversal[uniform_index(rng, l.orbit.size())];
    }
    return g;
  }

  /// Number of representatives at the outermost enumeration level (used to partition work).
  std::size_t top_width() const noexcept { return levels_.empty() ? 1 : levels_.back().orbit.size(); }

  /// Visits every element whose outermost transversal index lies in [begin, end).
  template <class Visitor>
  void for_each_element_in(std::size_t begin, std::size_t end, Visitor&& visit) const {
    if (levels_.empty()) {
      if (begin == 0 && end > 0) visit(identity_);
      return;
    }
    const Level& top = levels_.back();
    for (std::size_t i = begin; i < end && i < top.orbit.size(); ++i) {
      visit_from(levels_.size() - 1, top.transversal[i], visit);
    }
  }

  /// Visits every element exactly once; refuses when the order exceeds `cap`.
  template <class Visitor>
  void for_each_element(Visitor&& visit, std::uint64_t cap = kDefaultEnumerationCap) const {
    require_within(cap);
    for_each_element_in(0, top_width(), visit);
  }

  void require_within(std::uint64_t cap) const {
    Integer n = order();
    if (n > cap) throw CapExceeded(n, cap);
  }

private:
  template <class Visitor>
  void visit_from(std::size_t level, const Permutation& prefix, Visitor& visit) const {
    if (level == 0) {
      visit(prefix);
      return;
    }
    const Level& next = levels_[level - 1];
    for (const auto& u : next.transversal) visit_from(level - 1, prefix * u, visit);
  }

  void check_degree(const Permutation& g) const {
    if (g.degree() != degree_) throw InvalidInput("permutation degree does not match the group");
  }

  void add_strong_generator(const Permutation& h, std::size_t from, std::size_t to) {
    if (to == levels_.size()) {
      Level l;
      l.base = static_cast<Point>(h.first_moved_point());
      levels_.push_back(std::move(l));
    }
    for (std::size_t i = from; i <= to; ++i) {
      levels_[i].generators.push_back(h);
      rebuild_orbit(i);
    }
  }

  void rebuild_orbit(std::size_t i) {
    Level& l = levels_[i];
    l.orbit.assign(1, l.base);
    l.orbit_index.assign(degree_, -1);
    l.orbit_index[l.base] = 0;
    l.transversal.assign(1, identity_);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      for (const auto& s : l.generators) {
        Point y = s[l.orbit[k]];
        if (l.orbit_index[y] >= 0) continue;
        l.orbit_index[y] = static_cast<int>(l.orbit.size());
        l.orbit.push_back(y);
        l.transversal.push_back(l.transversal[k] * s);
      }
    }
    l.inverse_transversal.clear();
    l.inverse_transversal.reserve(l.transversal.size());
    for (const auto& u : l.transversal) l.inverse_transversal.push_back(u.inverse());
  }

  // Schreier-Sims closure: levels deeper than `start` are assumed complete.
  // Each Schreier generator u_x s u_{x^s}^-1 of level i must sift through
  // levels i+1.. to the identity; a nontrivial residue becomes a new strong
  // generator and processing resumes at the level where it stopped.
  void complete(std::size_t start) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      bool clean = true;
      const std::size_t li = static_cast<std::size_t>(i);
      for (std::size_t k = 0; clean && k < levels_[li].orbit.size(); ++k) {
        for (std::size_t s = 0; clean && s < levels_[li].generators.size(); ++s) {
          const Level& l = levels_[li];
          const Permutation& gen = l.generators[s];
          Point image = gen[l.orbit[k]];
          Permutation h = l.transversal[k] * gen * l.inverse_transversal[l.orbit_index[image]];
          if (h.is_identity()) continue;
          auto [residue, j] = sift(std::move(h), li + 1);
          if (!residue.is_identity()) {
            add_strong_generator(residue, li + 1, j);
            i = static_cast<std::ptrdiff_t>(j);
            clean = false;
          }
        }
      }
      if (clean) --i;
    }
  }

  std::size_t degree_;
  Permutation identity_;
  std::vector<Level> levels_;
};

}  // namespace cgt
