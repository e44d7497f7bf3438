#include <gtest/gtest.h>

#include <random>

#include "cgt/perm.hpp"
#include "cgt/random.hpp"

using cgt::Permutation;

namespace {

Permutation random_perm(cgt::Rng& rng, std::size_t n) {
  std::vector<cgt::Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<cgt::Point>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[cgt::uniform_index(rng, i)]);
  return Permutation(v);
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<cgt::Point>{0, 0, 1}), cgt::InvalidInput);
  EXPECT_THROW(Permutation(std::vector<cgt::Point>{0, 3, 1}), cgt::InvalidInput);
  EXPECT_THROW(Permutation(std::vector<cgt::Point>{}), cgt::InvalidInput);
  EXPECT_THROW(Permutation(std::size_t{0}), cgt::InvalidInput);
}

TEST(Permutation, ComposeIdentityAndInverse) {
  Permutation p = Permutation::from_cycles(5, {{0, 3, 1}, {2, 4}});
  Permutation id(5);
  EXPECT_EQ(compose(id, p), p);
  EXPECT_EQ(compose(p, p.inverse()), id);
  EXPECT_EQ(compose(p.inverse(), p), id);
}

// Golden test for the composition convention: the left factor acts first.
TEST(Permutation, LeftFactorActsFirst) {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  Permutation ab = compose(a, b);
  // 0 -a-> 1 -b-> 2, 1 -a-> 0 -b-> 0, 2 -a-> 2 -b-> 1
  EXPECT_EQ(ab, Permutation(std::vector<cgt::Point>{2, 0, 1}));
  EXPECT_EQ(cgt::to_cycle_string(ab), "(1 3 2)");
  EXPECT_EQ(cgt::element_order(ab), 3u);
}

TEST(Permutation, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), cgt::InvalidInput);
}

TEST(Permutation, ElementOrder) {
  EXPECT_EQ(cgt::element_order(Permutation(8)), 1u);
  EXPECT_EQ(cgt::element_order(Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}})), 7u);
  EXPECT_EQ(cgt::element_order(Permutation::from_cycles(8, {{0, 1, 2}, {3, 4, 5, 6, 7}})), 15u);
}

TEST(Permutation, CycleStructure) {
  EXPECT_EQ(cgt::cycle_structure(Permutation(4)).lengths, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(cgt::cycle_structure(Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})).lengths,
            (std::vector<std::size_t>{8}));
  EXPECT_EQ(cgt::cycle_structure(Permutation::from_cycles(8, {{0, 1, 2}, {3, 4, 5, 6, 7}})).lengths,
            (std::vector<std::size_t>{3, 5}));
}

TEST(Permutation, CycleNotationRoundTrip) {
  EXPECT_EQ(cgt::to_cycle_string(Permutation(6)), "()");
  Permutation p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(cgt::to_cycle_string(p), "(1 2 3)(4 5)");
  cgt::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Permutation q = random_perm(rng, 1 + i % 42);
    EXPECT_EQ(cgt::parse_cycle_string(q.degree(), cgt::to_cycle_string(q)), q);
  }
  EXPECT_THROW(cgt::parse_cycle_string(3, "(1 2"), cgt::InvalidInput);
  EXPECT_THROW(cgt::parse_cycle_string(3, "(1 4)"), cgt::InvalidInput);
}

TEST(PermutationProperty, OrderIsLcmAndFirstReturnToIdentity) {
  cgt::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Permutation p = random_perm(rng, 1 + i % 21);
    const std::uint64_t k = cgt::element_order(p);
    EXPECT_EQ(k, cgt::cycle_structure(p).order());
    EXPECT_EQ(cgt::cycle_structure(p).degree(), p.degree());
    Permutation x = p;
    std::uint64_t steps = 1;
    while (!x.is_identity()) {
      x = x * p;
      ++steps;
    }
    EXPECT_EQ(steps, k);
  }
}

TEST(PermutationProperty, AssociativityInverseAndConjugationInvariance) {
  cgt::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 30;
    Permutation a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE((a.inverse() * a).is_identity());
    EXPECT_EQ(cgt::element_order(a), cgt::element_order(a.inverse()));
    EXPECT_EQ(cgt::element_order(a), cgt::element_order(cgt::conjugate(a, b)));
    EXPECT_EQ(cgt::power(a, cgt::element_order(a)), Permutation(n));
  }
}
