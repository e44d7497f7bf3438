#pragma once

/**
 * @file field.hpp
 * @brief Arithmetic in GF(2^k) for k = 1, 2, 3.
 *
 * Elements are k-bit polynomials over GF(2) reduced modulo a fixed
 * primitive polynomial: x + 1 for GF(2), x^2 + x + 1 for GF(4) and
 * x^3 + x + 1 for GF(8). The fixed choice keeps point orderings stable.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "arith.hpp"

namespace cgt {

template <unsigned K>
struct Gf2Modulus;
template <>
struct Gf2Modulus<1> {
  static constexpr unsigned value = 0b11;
};
template <>
struct Gf2Modulus<2> {
  static constexpr unsigned value = 0b111;
};
template <>
struct Gf2Modulus<3> {
  static constexpr unsigned value = 0b1011;
};

template <unsigned K>
class GF2k {
public:
  static constexpr unsigned kDegree = K;
  static constexpr unsigned kSize = 1u << K;
  static constexpr unsigned kModulus = Gf2Modulus<K>::value;

  constexpr GF2k() = default;
  constexpr explicit GF2k(unsigned v) : v_(static_cast<std::uint8_t>(v)) {
    if (v >= kSize) throw InvalidInput("field element out of range");
  }

  static constexpr GF2k zero() { return GF2k(0); }
  static constexpr GF2k one() { return GF2k(1); }
  /// Generator of the multiplicative group (the class of x; 1 in GF(2)).
  static constexpr GF2k generator() { return GF2k(K == 1 ? 1 : 2); }

  static std::vector<GF2k> elements() {
    std::vector<GF2k> out;
    for (unsigned v = 0; v < kSize; ++v) out.emplace_back(v);
    return out;
  }

  constexpr unsigned value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr GF2k operator+(GF2k a, GF2k b) { return raw(a.v_ ^ b.v_); }
  friend constexpr GF2k operator-(GF2k a, GF2k b) { return a + b; }
  constexpr GF2k operator-() const { return *this; }

  friend constexpr GF2k operator*(GF2k a, GF2k b) {
    unsigned prod = 0;
    for (unsigned i = 0; i < K; ++i) {
      if (b.v_ >> i & 1u) prod ^= static_cast<unsigned>(a.v_) << i;
    }
    for (unsigned bit = 2 * K; bit-- > K;) {
      if (prod >> bit & 1u) prod ^= kModulus << (bit - K);
    }
    return raw(prod);
  }

  constexpr GF2k pow(std::uint64_t e) const {
    GF2k r = one(), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse; rejects zero.
  constexpr GF2k inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero in GF(2^k)");
    return pow(kSize - 2);
  }

  friend constexpr GF2k operator/(GF2k a, GF2k b) { return a * b.inverse(); }

  /// x -> x^2, the generator of Gal(GF(2^k)/GF(2)).
  constexpr GF2k frobenius() const { return *this * *this; }

  /// Least n >= 1 with x^n = 1; rejects zero.
  constexpr unsigned multiplicative_order() const {
    if (is_zero()) throw InvalidInput("zero has no multiplicative order");
    GF2k x = *this;
    unsigned n = 1;
    while (x != one()) {
      x = x * *this;
      ++n;
    }
    return n;
  }

  GF2k& operator+=(GF2k o) { return *this = *this + o; }
  GF2k& operator*=(GF2k o) { return *this = *this * o; }

  friend constexpr bool operator==(GF2k, GF2k) = default;
  friend constexpr auto operator<=>(GF2k, GF2k) = default;

  friend std::ostream& operator<<(std::ostream& os, GF2k a) { return os << a.value(); }

private:
  static constexpr GF2k raw(unsigned v) {
    GF2k r;
    r.v_ = static_cast<std::uint8_t>(v);
    return r;
  }

  std::uint8_t v_ = 0;
};

using GF2 = GF2k<1>;
using GF4 = GF2k<2>;
using GF8 = GF2k<3>;

}  // namespace cgt
