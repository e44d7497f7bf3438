#pragma once

// Affine groups 2^d : L acting on the vectors of GF(2)^d.
//
// A vector is a d-bit integer (bit i = coordinate i) and doubles as the
// point index, so the affine group has degree 2^d. Linear maps are GF(2)
// matrices with rows stored as bitmasks; x -> x * M is the XOR of the rows
// selected by the set bits of x.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "group.hpp"
#include "perm.hpp"

namespace cgt {

class Gf2Matrix {
public:
  Gf2Matrix(unsigned dim, std::vector<std::uint32_t> rows) : dim_(dim), rows_(std::move(rows)) {
    if (dim_ == 0 || dim_ > 16) throw InvalidInput("Gf2Matrix: dimension must be in 1..16");
    if (rows_.size() != dim_) throw InvalidInput("Gf2Matrix: wrong number of rows");
    for (auto r : rows_) {
      if (r >> dim_) throw InvalidInput("Gf2Matrix: row has bits beyond the dimension");
    }
  }

  static Gf2Matrix identity(unsigned dim) {
    std::vector<std::uint32_t> rows(dim);
    for (unsigned i = 0; i < dim; ++i) rows[i] = 1u << i;
    return Gf2Matrix(dim, std::move(rows));
  }

  /// Matrix of a GF(2)-linear map given by its values on the basis vectors.
  static Gf2Matrix from_linear_map(unsigned dim, const std::function<std::uint32_t(std::uint32_t)>& f) {
    std::vector<std::uint32_t> rows(dim);
    for (unsigned i = 0; i < dim; ++i) rows[i] = f(1u << i);
    return Gf2Matrix(dim, std::move(rows));
  }

  unsigned dim() const noexcept { return dim_; }
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }

  std::uint32_t apply(std::uint32_t x) const {
    std::uint32_t y = 0;
    for (unsigned i = 0; i < dim_; ++i) {
      if (x >> i & 1u) y ^= rows_[i];
    }
    return y;
  }

  bool invertible() const {
    std::vector<std::uint32_t> m = rows_;
    unsigned rank = 0;
    for (unsigned bit = 0; bit < dim_; ++bit) {
      unsigned p = rank;
      while (p < dim_ && !(m[p] >> bit & 1u)) ++p;
      if (p == dim_) continue;
      std::swap(m[p], m[rank]);
      for (unsigned r = 0; r < dim_; ++r) {
        if (r != rank && (m[r] >> bit & 1u)) m[r] ^= m[rank];
      }
      ++rank;
    }
    return rank == dim_;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
  unsigned dim_;
  std::vector<std::uint32_t> rows_;
};

/// Permutation of all 2^d vectors induced by x -> x * M.
inline Permutation linear_action(const Gf2Matrix& m) {
  if (!m.invertible()) throw InvalidInput("linear_action: singular matrix");
  std::vector<Point> images(std::size_t{1} << m.dim());
  for (std::uint32_t x = 0; x < images.size(); ++x) images[x] = static_cast<Point>(m.apply(x));
  return Permutation(std::move(images));
}

/// Permutation of the 2^d - 1 nonzero vectors; vector v sits at point v - 1.
inline Permutation nonzero_vector_action(const Gf2Matrix& m) {
  if (!m.invertible()) throw InvalidInput("nonzero_vector_action: singular matrix");
  std::vector<Point> images((std::size_t{1} << m.dim()) - 1);
  for (std::uint32_t x = 1; x <= images.size(); ++x) images[x - 1] = static_cast<Point>(m.apply(x) - 1);
  return Permutation(std::move(images));
}

/// Inverse of `nonzero_vector_action`: reads the matrix back from the images of the basis vectors.
inline Gf2Matrix matrix_from_nonzero_action(unsigned dim, const Permutation& p) {
  if (p.degree() != (std::size_t{1} << dim) - 1) throw InvalidInput("matrix_from_nonzero_action: wrong degree");
  std::vector<std::uint32_t> rows(dim);
  for (unsigned i = 0; i < dim; ++i) rows[i] = static_cast<std::uint32_t>(p[(1u << i) - 1]) + 1;
  Gf2Matrix m(dim, std::move(rows));
  if (nonzero_vector_action(m) != p) throw InvalidInput("matrix_from_nonzero_action: permutation is not linear");
  return m;
}

/// Translation x -> x + t.
inline Permutation translation(unsigned dim, std::uint32_t t) {
  std::vector<Point> images(std::size_t{1} << dim);
  for (std::uint32_t x = 0; x < images.size(); ++x) images[x] = static_cast<Point>(x ^ t);
  return Permutation(std::move(images));
}

/// 2^d : <linear_gens> on 2^d points: basis translations plus the linear generators.
inline GeneratedGroup affine_semidirect(unsigned dim, const std::vector<Gf2Matrix>& linear_gens,
                                        std::string label = {}) {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < dim; ++i) gens.push_back(translation(dim, 1u << i));
  for (const auto& m : linear_gens) {
    if (m.dim() != dim) throw InvalidInput("affine_semidirect: linear generator has the wrong dimension");
    gens.push_back(linear_action(m));
  }
  return make_group(std::size_t{1} << dim, gens, std::move(label));
}

}  // namespace cgt
