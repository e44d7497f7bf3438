#pragma once

#include <cstdint>
#include <random>

namespace cgt {

/// Seeded engine; mt19937_64 output is fixed by the standard, so runs are reproducible across platforms.
using Rng = std::mt19937_64;

/// Uniform draw from [0, n) by rejection sampling. std::uniform_int_distribution
/// is implementation-defined, which would break cross-platform reproducibility.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  // 2^64 mod n; draws at or above 2^64 - r would bias the low residues.
  const std::uint64_t r = (UINT64_MAX % n + 1) % n;
  while (true) {
    std::uint64_t x = rng();
    if (r == 0 || x <= UINT64_MAX - r) return x % n;
  }
}

}  // namespace cgt
