#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {0, ..., n-1} stored as image sequences.
 *
 * Composition convention, used everywhere in this library: in
 * `compose(p, q)` (also written `p * q`) the left operand acts first, so
 * the product maps i to q[p[i]]. Points are 0-based internally; the
 * textual cycle notation produced by `to_cycle_string` is 1-based.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace cgt {

using Point = std::uint16_t;

class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree) : images_(degree) {
    if (degree == 0) throw InvalidInput("permutation degree must be >= 1");
    if (degree > 65535) throw InvalidInput("permutation degree exceeds 65535");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes an image sequence; rejects anything that is not a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) throw InvalidInput("permutation degree must be >= 1");
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) throw InvalidInput("image sequence is not a bijection");
      seen[x] = true;
    }
  }

  static Permutation from_images(std::span<const int> images) {
    std::vector<Point> v;
    v.reserve(images.size());
    for (int x : images) {
      if (x < 0 || x > 65535) throw InvalidInput("image out of range");
      v.push_back(static_cast<Point>(x));
    }
    return Permutation(std::move(v));
  }

  /// Builds a permutation from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i];
        int b = c[(i + 1) % c.size()];
        if (a < 0 || static_cast<std::size_t>(a) >= degree || b < 0 || static_cast<std::size_t>(b) >= degree)
          throw InvalidInput("cycle point out of range");
        if (used[a]) throw InvalidInput("cycles are not disjoint");
        used[a] = true;
        p.images_[a] = static_cast<Point>(b);
      }
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  Point image(std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r = *this;
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  /// First point moved, or degree() for the identity.
  std::size_t first_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return i;
    }
    return images_.size();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  friend Permutation compose(const Permutation& p, const Permutation& q);

private:
  std::vector<Point> images_;
};

/// p acts first: i -> q[p[i]].
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidInput("compose: degree mismatch");
  Permutation r = p;
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result(p.degree());
  Permutation base = p;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

/// q^-1 p q: conjugate of p by q.
inline Permutation conjugate(const Permutation& p, const Permutation& q) { return q.inverse() * p * q; }

/// a^-1 b^-1 a b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// Disjoint cycle lengths, fixed points included as 1-cycles, sorted ascending.
struct CycleStructure {
  std::vector<std::size_t> lengths;

  std::size_t degree() const { return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}); }
  std::uint64_t order() const {
    std::uint64_t l = 1;
    for (auto len : lengths) l = std::lcm(l, static_cast<std::uint64_t>(len));
    return l;
  }
  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

inline CycleStructure cycle_structure(const Permutation& p) {
  CycleStructure cs;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    cs.lengths.push_back(len);
  }
  std::sort(cs.lengths.begin(), cs.lengths.end());
  return cs;
}

/// Order as the lcm of the cycle lengths. Allocation-light; this runs once per enumerated element.
inline std::uint64_t element_order(const Permutation& p) {
  const std::size_t n = p.degree();
  std::uint64_t order = 1;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

/// True for even permutations.
inline bool is_even(const Permutation& p) {
  std::size_t transpositions = 0;
  for (auto len : cycle_structure(p).lengths) transpositions += len - 1;
  return transpositions % 2 == 0;
}

/// 1-based disjoint cycle notation, fixed points omitted; identity is "()".
inline std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) os << ' ';
      os << j + 1;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

/// Parses the 1-based notation written by `to_cycle_string`.
inline Permutation parse_cycle_string(std::size_t degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("cycle notation: expected '('");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw InvalidInput("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      int v = 0;
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
      if (i == start) throw InvalidInput("cycle notation: expected a point");
      if (v < 1) throw InvalidInput("cycle notation: points are 1-based");
      cycle.push_back(v - 1);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_cycle_string(p); }

}  // namespace cgt

template <>
struct std::hash<cgt::Permutation> {
  std::size_t operator()(const cgt::Permutation& p) const noexcept {
    auto imgs = p.images();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(imgs.data()), imgs.size() * sizeof(cgt::Point)));
  }
};
