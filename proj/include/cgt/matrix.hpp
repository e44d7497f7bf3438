#pragma once

// Small square matrices over a finite field. Vectors are rows and act on
// the left of matrices (v -> v * M), so (v * A) * B = v * (A * B) matches
// the left-acts-first permutation convention.

#include <array>
#include <cstddef>
#include <utility>

#include "arith.hpp"

namespace cgt {

template <class F, std::size_t D>
using Vec = std::array<F, D>;

template <class F, std::size_t D>
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(const std::array<std::array<F, D>, D>& rows) : a_(rows) {}

  static Matrix identity() { return scalar(F::one()); }

  static Matrix scalar(F lambda) {
    Matrix m;
    for (std::size_t i = 0; i < D; ++i) m.a_[i][i] = lambda;
    return m;
  }

  /// I + lambda * E_{ij}.
  static Matrix transvection(std::size_t i, std::size_t j, F lambda) {
    Matrix m = identity();
    m.a_[i][j] = m.a_[i][j] + lambda;
    return m;
  }

  static Matrix diagonal(const Vec<F, D>& d) {
    Matrix m;
    for (std::size_t i = 0; i < D; ++i) m.a_[i][i] = d[i];
    return m;
  }

  F& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
  F operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t k = 0; k < D; ++k)
        for (std::size_t j = 0; j < D; ++j) r.a_[i][j] += x.a_[i][k] * y.a_[k][j];
    return r;
  }

  friend Vec<F, D> operator*(const Vec<F, D>& v, const Matrix& m) {
    Vec<F, D> r{};
    for (std::size_t k = 0; k < D; ++k)
      for (std::size_t j = 0; j < D; ++j) r[j] += v[k] * m.a_[k][j];
    return r;
  }

  Matrix transpose() const {
    Matrix r;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) r.a_[j][i] = a_[i][j];
    return r;
  }

  /// Entrywise Frobenius.
  Matrix frobenius() const {
    Matrix r;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) r.a_[i][j] = a_[i][j].frobenius();
    return r;
  }

  F determinant() const {
    auto m = a_;
    F det = F::one();
    for (std::size_t c = 0; c < D; ++c) {
      std::size_t p = c;
      while (p < D && m[p][c].is_zero()) ++p;
      if (p == D) return F::zero();
      if (p != c) std::swap(m[p], m[c]);  // sign is irrelevant in characteristic 2
      det *= m[c][c];
      F inv = m[c][c].inverse();
      for (std::size_t r = c + 1; r < D; ++r) {
        F f = m[r][c] * inv;
        for (std::size_t k = c; k < D; ++k) m[r][k] = m[r][k] - f * m[c][k];
      }
    }
    return det;
  }

  bool invertible() const { return !determinant().is_zero(); }

  /// Gauss-Jordan inverse; rejects singular matrices.
  Matrix inverse() const {
    auto m = a_;
    Matrix inv = identity();
    for (std::size_t c = 0; c < D; ++c) {
      std::size_t p = c;
      while (p < D && m[p][c].is_zero()) ++p;
      if (p == D) throw InvalidInput("matrix is singular");
      std::swap(m[p], m[c]);
      std::swap(inv.a_[p], inv.a_[c]);
      F s = m[c][c].inverse();
      for (std::size_t k = 0; k < D; ++k) {
        m[c][k] *= s;
        inv.a_[c][k] *= s;
      }
      for (std::size_t r = 0; r < D; ++r) {
        if (r == c || m[r][c].is_zero()) continue;
        F f = m[r][c];
        for (std::size_t k = 0; k < D; ++k) {
          m[r][k] = m[r][k] - f * m[c][k];
          inv.a_[r][k] = inv.a_[r][k] - f * inv.a_[c][k];
        }
      }
    }
    return inv;
  }

  Matrix inverse_transpose() const { return inverse().transpose(); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::array<std::array<F, D>, D> a_{};
};

}  // namespace cgt
