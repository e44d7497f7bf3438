#pragma once

/**
 * @file projective.hpp
 * @brief Projective spaces PG(D-1, q) and the permutation actions of
 * matrices on their points and (dual-coordinate) hyperplanes.
 *
 * Points are normalized row vectors (first nonzero coordinate 1), listed
 * lexicographically by coordinate value with the first coordinate most
 * significant. A hyperplane with dual coordinates w is {v : v . w = 0};
 * it is stored as the normalized vector w, in the same ordering. Under
 * v -> v * M, the hyperplane w moves to w * (M^-1)^T.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"
#include "perm.hpp"

namespace cgt {

template <class F, std::size_t D>
class ProjectiveSpace {
public:
  using Vector = Vec<F, D>;

  ProjectiveSpace() {
    index_.assign(code_count(), -1);
    Vector v{};
    for (std::size_t code = 1; code < code_count(); ++code) {
      std::size_t c = code;
      for (std::size_t i = D; i-- > 0;) {
        v[i] = F(static_cast<unsigned>(c % F::kSize));
        c /= F::kSize;
      }
      if (normalize(v) == v) {
        index_[code] = static_cast<int>(points_.size());
        points_.push_back(v);
      }
    }
  }

  std::size_t size() const noexcept { return points_.size(); }
  const Vector& point(std::size_t i) const { return points_.at(i); }
  const std::vector<Vector>& points() const noexcept { return points_; }

  /// Scales so that the first nonzero coordinate is 1; rejects the zero vector.
  static Vector normalize(const Vector& v) {
    for (std::size_t i = 0; i < D; ++i) {
      if (!v[i].is_zero()) {
        F s = v[i].inverse();
        Vector r;
        for (std::size_t j = 0; j < D; ++j) r[j] = v[j] * s;
        return r;
      }
    }
    throw InvalidInput("the zero vector is not a projective point");
  }

  /// Position of the point spanned by v (any nonzero scalar multiple).
  std::size_t index_of(const Vector& v) const { return static_cast<std::size_t>(index_[code(normalize(v))]); }

private:
  static constexpr std::size_t code_count() {
    std::size_t n = 1;
    for (std::size_t i = 0; i < D; ++i) n *= F::kSize;
    return n;
  }
  static std::size_t code(const Vector& v) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < D; ++i) c = c * F::kSize + v[i].value();
    return c;
  }

  std::vector<Vector> points_;
  std::vector<int> index_;
};

/// Permutation of the points induced by v -> v * m; scalar matrices act trivially.
template <class F, std::size_t D>
Permutation projective_action(const ProjectiveSpace<F, D>& space, const Matrix<F, D>& m) {
  if (!m.invertible()) throw InvalidInput("projective_action: singular matrix");
  std::vector<Point> images(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    images[i] = static_cast<Point>(space.index_of(space.point(i) * m));
  }
  return Permutation(std::move(images));
}

/// Coordinatewise Frobenius on the points (fixes the normalization).
template <class F, std::size_t D>
Permutation frobenius_action(const ProjectiveSpace<F, D>& space) {
  std::vector<Point> images(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto v = space.point(i);
    for (auto& x : v) x = x.frobenius();
    images[i] = static_cast<Point>(space.index_of(v));
  }
  return Permutation(std::move(images));
}

/// Action on points (0..N-1) and hyperplanes (N..2N-1) simultaneously.
template <class F, std::size_t D>
Permutation point_hyperplane_action(const ProjectiveSpace<F, D>& space, const Matrix<F, D>& m) {
  const std::size_t n = space.size();
  Permutation on_points = projective_action(space, m);
  Permutation on_lines = projective_action(space, m.inverse_transpose());
  std::vector<Point> images(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = on_points[i];
    images[n + i] = static_cast<Point>(n + on_lines[i]);
  }
  return Permutation(std::move(images));
}

/// Identity correlation: the point with coordinates v is swapped with the hyperplane with dual coordinates v.
template <class F, std::size_t D>
Permutation correlation(const ProjectiveSpace<F, D>& space) {
  const std::size_t n = space.size();
  std::vector<Point> images(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<Point>(n + i);
    images[n + i] = static_cast<Point>(i);
  }
  return Permutation(std::move(images));
}

/// Frobenius on points and hyperplanes together.
template <class F, std::size_t D>
Permutation frobenius_point_hyperplane_action(const ProjectiveSpace<F, D>& space) {
  const std::size_t n = space.size();
  Permutation f = frobenius_action(space);
  std::vector<Point> images(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = f[i];
    images[n + i] = static_cast<Point>(n + f[i]);
  }
  return Permutation(std::move(images));
}

enum class OuterAutomorphism { field, graph, graph_field };

inline std::string to_string(OuterAutomorphism kind) {
  switch (kind) {
    case OuterAutomorphism::field: return "field";
    case OuterAutomorphism::graph: return "graph";
    case OuterAutomorphism::graph_field: return "graph-field";
  }
  return "?";
}

/// Index-2 extension of the projective image of `base` by a field, graph
/// (identity correlation) or graph-field automorphism. The field variant
/// acts on the points only; the other two act on points and hyperplanes.
template <class F, std::size_t D>
GeneratedGroup duality_extension(const ProjectiveSpace<F, D>& space, const std::vector<Matrix<F, D>>& base,
                                 OuterAutomorphism kind, std::string label = {}) {
  std::vector<Permutation> gens;
  if (kind == OuterAutomorphism::field) {
    for (const auto& m : base) gens.push_back(projective_action(space, m));
    gens.push_back(frobenius_action(space));
    return make_group(space.size(), gens, std::move(label));
  }
  for (const auto& m : base) gens.push_back(point_hyperplane_action(space, m));
  Permutation outer = correlation(space);
  if (kind == OuterAutomorphism::graph_field) outer = outer * frobenius_point_hyperplane_action(space);
  gens.push_back(outer);
  return make_group(2 * space.size(), gens, std::move(label));
}

}  // namespace cgt
