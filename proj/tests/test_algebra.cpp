#include <gtest/gtest.h>

#include "cgt/affine.hpp"
#include "cgt/catalog.hpp"
#include "cgt/field.hpp"
#include "cgt/matrix.hpp"
#include "cgt/projective.hpp"

using cgt::GF2;
using cgt::GF4;
using cgt::GF8;
using cgt::MatrixGF4;

template <class F>
class FieldAxioms : public ::testing::Test {};
using Fields = ::testing::Types<GF2, GF4, GF8>;
TYPED_TEST_SUITE(FieldAxioms, Fields);

TYPED_TEST(FieldAxioms, ExhaustiveTables) {
  using F = TypeParam;
  const auto all = F::elements();
  ASSERT_EQ(all.size(), F::kSize);
  for (auto a : all) {
    EXPECT_EQ(a + a, F::zero());
    EXPECT_EQ(a * F::one(), a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), F::one());
    }
    for (auto b : all) {
      EXPECT_EQ(a * b, b * a);
      for (auto c : all) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
  EXPECT_THROW(F::zero().inverse(), cgt::InvalidInput);
}

TYPED_TEST(FieldAxioms, FrobeniusIsAutomorphismFixingPrimeField) {
  using F = TypeParam;
  int fixed = 0;
  for (auto a : F::elements()) {
    if (a.frobenius() == a) ++fixed;
    for (auto b : F::elements()) {
      EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
      EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
    }
    // Frobenius has order k on GF(2^k).
    F x = a;
    for (unsigned i = 0; i < F::kDegree; ++i) x = x.frobenius();
    EXPECT_EQ(x, a);
  }
  EXPECT_EQ(fixed, 2);
}

TEST(Field, GeneratorOrders) {
  EXPECT_EQ(GF8::generator().multiplicative_order(), 7u);
  EXPECT_EQ(GF4::generator().multiplicative_order(), 3u);
  EXPECT_NE(GF8::generator().frobenius(), GF8::generator());
}

TEST(Matrix, InverseAndDeterminant) {
  for (const auto& m : cgt::sl3_4_generators()) {
    EXPECT_EQ(m.determinant(), GF4::one());
    EXPECT_EQ(m * m.inverse(), MatrixGF4::identity());
  }
  MatrixGF4 singular;
  singular(0, 0) = GF4::one();
  EXPECT_FALSE(singular.invertible());
  EXPECT_THROW(singular.inverse(), cgt::InvalidInput);
}

TEST(Projective, PointCountAndNormalization) {
  const auto& plane = cgt::projective_plane_4();
  EXPECT_EQ(plane.size(), 21u);
  for (std::size_t i = 0; i < plane.size(); ++i) {
    auto v = plane.point(i);
    EXPECT_EQ(plane.index_of(v), i);
    for (auto s : GF4::elements()) {
      if (s.is_zero()) continue;
      auto w = v;
      for (auto& x : w) x = x * s;
      EXPECT_EQ(plane.index_of(w), i);
    }
  }
  // Lexicographic order: first point is (0, 0, 1).
  EXPECT_EQ(plane.point(0), (cgt::Vec<GF4, 3>{GF4(0), GF4(0), GF4(1)}));
}

TEST(Projective, IdentityAndScalarsActTrivially) {
  const auto& plane = cgt::projective_plane_4();
  EXPECT_TRUE(cgt::projective_action(plane, MatrixGF4::identity()).is_identity());
  for (unsigned s = 1; s < 4; ++s)
    EXPECT_TRUE(cgt::projective_action(plane, MatrixGF4::scalar(GF4(s))).is_identity());
  EXPECT_THROW(cgt::projective_action(plane, MatrixGF4{}), cgt::InvalidInput);
}

namespace {

MatrixGF4 random_sl(cgt::Rng& rng, int words = 12) {
  auto gens = cgt::sl3_4_generators();
  MatrixGF4 m = MatrixGF4::identity();
  for (int i = 0; i < words; ++i) m = m * gens[cgt::uniform_index(rng, gens.size())];
  return m;
}

// SL(3,4) acting on the 63 nonzero vectors of GF(4)^3.
cgt::Permutation vector_action(const MatrixGF4& m) {
  auto code = [](const cgt::Vec<GF4, 3>& v) { return v[0].value() * 16 + v[1].value() * 4 + v[2].value(); };
  std::vector<cgt::Point> images(63);
  for (unsigned c = 1; c < 64; ++c) {
    cgt::Vec<GF4, 3> v{GF4(c / 16), GF4(c / 4 % 4), GF4(c % 4)};
    images[c - 1] = static_cast<cgt::Point>(code(v * m) - 1);
  }
  return cgt::Permutation(images);
}

}  // namespace

TEST(Projective, ActionIsHomomorphism) {
  const auto& plane = cgt::projective_plane_4();
  cgt::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    MatrixGF4 a = random_sl(rng), b = random_sl(rng);
    EXPECT_EQ(cgt::projective_action(plane, a * b),
              cgt::compose(cgt::projective_action(plane, a), cgt::projective_action(plane, b)));
  }
}

TEST(Projective, KernelOnSL34HasOrderThree) {
  std::vector<cgt::Permutation> linear, projective;
  for (const auto& m : cgt::sl3_4_generators()) {
    linear.push_back(vector_action(m));
    projective.push_back(cgt::projective_action(cgt::projective_plane_4(), m));
  }
  auto sl = cgt::build_chain(cgt::make_group(63, linear));
  auto psl = cgt::build_chain(cgt::make_group(21, projective));
  EXPECT_EQ(sl.order(), 60480);
  EXPECT_EQ(psl.order(), 20160);
  EXPECT_EQ(sl.order() / psl.order(), 3);
}

TEST(Duality, InvolutionAndInverseTransposeTwist) {
  const auto& plane = cgt::projective_plane_4();
  const auto delta = cgt::correlation(plane);
  EXPECT_TRUE((delta * delta).is_identity());
  cgt::Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    MatrixGF4 m = random_sl(rng);
    EXPECT_EQ(delta * cgt::point_hyperplane_action(plane, m) * delta,
              cgt::point_hyperplane_action(plane, m.inverse_transpose()));
  }
}

TEST(Duality, ExtensionsHaveOrder40320AndInnerPartPreservesBlocks) {
  const auto& plane = cgt::projective_plane_4();
  for (const auto& m : cgt::sl3_4_generators()) {
    auto p = cgt::point_hyperplane_action(plane, m);
    for (std::size_t i = 0; i < 21; ++i) {
      EXPECT_LT(p[i], 21);
      EXPECT_GE(p[21 + i], 21);
    }
  }
  auto exts = cgt::l3_4_extensions();
  ASSERT_EQ(exts.size(), 3u);
  int matching = 0;
  for (const auto& e : exts) {
    EXPECT_EQ(e.table.group_order, 40320u) << cgt::to_string(e.kind);
    matching += cgt::nse(e.table) == cgt::thompson_nse();
  }
  EXPECT_EQ(matching, 1);
}

TEST(Affine, Orders) {
  EXPECT_EQ(cgt::build_chain(cgt::affine_semidirect(4, {})).order(), 16);
  EXPECT_EQ(cgt::build_chain(cgt::two_frobenius_168()).order(), 168);
  auto found = cgt::affine_2e4_a7(1);
  EXPECT_EQ(cgt::build_chain(found.group).order(), 40320);
  auto linear = cgt::make_group(16, {cgt::linear_action(found.a), cgt::linear_action(found.b)});
  EXPECT_EQ(cgt::build_chain(linear).order(), 2520);
  EXPECT_EQ(cgt::build_chain(found.group).order(), 16 * cgt::build_chain(linear).order());
}

TEST(Affine, MatrixPermutationRoundTrip) {
  auto gl = cgt::build_chain(cgt::gl4_2_on_nonzero_vectors());
  EXPECT_EQ(gl.order(), 20160);
  cgt::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto p = gl.random_element(rng);
    auto m = cgt::matrix_from_nonzero_action(4, p);
    EXPECT_EQ(cgt::nonzero_vector_action(m), p);
  }
  // A 15-cycle shifting v -> v + 1 is not linear.
  std::vector<cgt::Point> shift(15);
  for (std::size_t i = 0; i < 15; ++i) shift[i] = static_cast<cgt::Point>((i + 1) % 15);
  EXPECT_THROW(cgt::matrix_from_nonzero_action(4, cgt::Permutation(shift)), cgt::InvalidInput);
  EXPECT_THROW(cgt::linear_action(cgt::Gf2Matrix(2, {1, 1})), cgt::InvalidInput);
}
