#pragma once

// Exact integer helpers shared by the group and deduction code.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgt {

/// Arbitrary-precision integer used for group orders and Sylow counts.
using Integer = boost::multiprecision::cpp_int;

/// Thrown whenever a caller hands in data that violates an operation's contract.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Prime power p^e inside a factorization.
struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization p1^a1 * ... * pt^at with p1 < ... < pt and every ai >= 1.
using Factorization = std::vector<PrimePower>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Factorization factorize(Integer n) {
  if (n < 1) throw InvalidInput("factorize: argument must be positive");
  Factorization out;
  for (std::uint64_t p = 2; Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n.convert_to<std::uint64_t>(), 1});
  return out;
}

/// Checks strictly increasing primes with positive exponents; throws naming the violation.
inline void validate_factorization(const Factorization& f) {
  std::uint64_t last = 0;
  for (const auto& [p, e] : f) {
    if (!is_prime(p)) throw InvalidInput("factorization: " + std::to_string(p) + " is not prime");
    if (e == 0) throw InvalidInput("factorization: exponent of " + std::to_string(p) + " must be >= 1");
    if (p <= last) throw InvalidInput("factorization: primes must be strictly increasing");
    last = p;
  }
}

inline Integer expand(const Factorization& f) {
  Integer n = 1;
  for (const auto& [p, e] : f) {
    for (unsigned i = 0; i < e; ++i) n *= p;
  }
  return n;
}

/// Exponent of p in n (0 when p does not divide n).
inline unsigned valuation(Integer n, std::uint64_t p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Positive divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// Renders "2^6 * 3^2 * 5 * 7"; the empty factorization renders as "1".
inline std::string to_string(const Factorization& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << " * ";
    os << f[i].prime;
    if (f[i].exponent != 1) os << '^' << f[i].exponent;
  }
  return os.str();
}

template <class Range>
std::string join(const Range& values, const char* sep = ", ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace cgt
