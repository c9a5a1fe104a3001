#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qpoisson/matrix.hpp"
#include "qpoisson/sampling.hpp"
#include "qpoisson/subspace.hpp"
#include "qpoisson/tensor.hpp"

using namespace qpoisson;
using testing_support::bivector;
using testing_support::vec;

TEST(Rational, CanonicalText) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational(0, 5).str(), "0");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ArbitraryPrecision) {
  Rational big = factorial(30);
  EXPECT_EQ(big.str(), "265252859812191058636308480000000");
  EXPECT_EQ(big / factorial(29), Rational(30));
}

TEST(Matrix, InverseAndDeterminant) {
  const Matrix m = Matrix::from_rows({vec({2, 1}), vec({1, 1})}, 2);
  EXPECT_EQ(determinant(m), Rational(1));
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv * m, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2)).has_value());
}

TEST(Matrix, KernelSpansNullSpace) {
  const Matrix m = Matrix::from_rows({vec({1, 1, 0}), vec({0, 0, 1})}, 3);
  const auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(k[0])));
}

TEST(Subspace, Examples) {
  const Subspace a = Subspace::span(2, {vec({1, 1})});
  const Subspace b = Subspace::span(2, {vec({1, -1})});
  EXPECT_EQ(intersect(a, b).dim(), 0u);
  EXPECT_EQ(sum(a, b), Subspace::full(2));
  EXPECT_TRUE(Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})}).contains(vec({1, 0, 0})));
  EXPECT_FALSE(Subspace::span(3, {vec({1, 0, 0})}).contains(vec({0, 1, 0})));
}

TEST(Subspace, DependentSpanIsReduced) {
  const Subspace s = Subspace::span(3, {vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 0, 0})});
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.basis()[0], vec({1, 2, 3}));
}

TEST(Subspace, EchelonIsCanonicalUnderRowOperations) {
  Sampler s(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vec> rows{s.vector(5), s.vector(5), s.vector(5)};
    const Subspace a = Subspace::span(5, rows);
    // random invertible mix: unit lower triangular times a nonzero diagonal
    std::vector<Vec> mixed = rows;
    mixed[1] = add(mixed[1], scale(s.rational(), mixed[0]));
    mixed[2] = add(mixed[2], add(scale(s.rational(), mixed[0]), scale(s.rational(), mixed[1])));
    mixed[0] = scale(Rational(-7, 3), mixed[0]);
    std::swap(mixed[0], mixed[2]);
    EXPECT_EQ(Subspace::span(5, mixed), a);
  }
}

TEST(Subspace, IntersectionAgreesWithDimensionFormula) {
  Sampler s(12);
  for (int t = 0; t < 50; ++t) {
    const Subspace a = Subspace::span(4, {s.vector(4), s.vector(4)});
    const Subspace b = Subspace::span(4, {s.vector(4), s.vector(4), s.vector(4)});
    const Subspace m = intersect(a, b);
    EXPECT_EQ(m.dim() + sum(a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(m));
    EXPECT_TRUE(b.contains(m));
  }
}

TEST(Subspace, AnnihilatorAndQuotient) {
  const Subspace h = Subspace::span(3, {vec({1, 1, 0})});
  const Subspace ann = annihilator(h);
  EXPECT_EQ(ann.dim(), 2u);
  for (const auto& l : ann.basis()) EXPECT_EQ(dot(l, h.basis()[0]), Rational(0));
  const Matrix q = quotient_map(h);
  EXPECT_EQ(q.rows(), 2u);
  EXPECT_TRUE(is_zero(q.apply(h.basis()[0])));
  EXPECT_EQ(q * quotient_section(h), Matrix::identity(2));
}

TEST(Subspace, AmbientMismatchThrows) {
  EXPECT_THROW(sum(Subspace(2), Subspace(3)), std::invalid_argument);
  EXPECT_THROW(intersect(Subspace(2), Subspace(3)), std::invalid_argument);
}

TEST(Alt, BasisExamples) {
  Tensor expect(2, 2);
  expect.at({0, 1}) = 1;
  expect.at({1, 0}) = -1;
  EXPECT_EQ(alt(Tensor::basis(2, {0, 1})), expect);
  EXPECT_TRUE(alt(Tensor::basis(2, {0, 0})).is_zero());
}

TEST(Alt, MatchesPermutationSumOracle) {
  Sampler s(1);
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n : {2u, 3u, 5u}) {
      const Tensor t = s.tensor(n, k);
      EXPECT_EQ(alt(t), oracle::alt(t)) << "n=" << n << " k=" << k;
    }
}

TEST(Alt, IdempotentUpToFactorial) {
  Sampler s(2);
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 1; n <= 6; ++n) {
      if (k == 4 && n == 6) continue;  // 1296 entries times 24 permutations; covered by n = 5
      const Tensor t = s.tensor(n, k);
      const Tensor a = alt(t);
      EXPECT_TRUE(a.antisymmetric());
      EXPECT_EQ(alt(a), factorial(k) * a) << "n=" << n << " k=" << k;
    }
}

TEST(Wedge, Examples) {
  const Tensor e0 = Tensor::basis(3, {0}), e1 = Tensor::basis(3, {1}), e2 = Tensor::basis(3, {2});
  EXPECT_EQ(wedge(e0, e1), bivector(3, 0, 1));
  EXPECT_EQ(wedge(wedge(e0, e1), e2), oracle::alt(Tensor::basis(3, {0, 1, 2})));
  EXPECT_TRUE(wedge(e0, e0).is_zero());
  Sampler s(3);
  const Tensor u = Tensor::from_vector(s.vector(3));
  EXPECT_TRUE(wedge(u, u).is_zero());
}

TEST(Wedge, GradedCommutative) {
  Sampler s(4);
  for (int t = 0; t < 20; ++t) {
    const Tensor u = Tensor::from_vector(s.vector(4));
    const Tensor v = s.bivector(4);
    const Tensor w = Tensor::from_vector(s.vector(4));
    EXPECT_EQ(wedge(u, v), wedge(v, u));                   // (-1)^{1·2}
    EXPECT_EQ(wedge(u, w), -wedge(w, u));                  // (-1)^{1·1}
    const Tensor v2 = s.bivector(4);
    EXPECT_EQ(wedge(v, v2), wedge(v2, v));                // (-1)^{2·2}
  }
}

TEST(Wedge, RejectsUnflaggedOrMismatched) {
  EXPECT_THROW(wedge(Tensor::basis(2, {0, 1}), Tensor::basis(2, {0})), std::invalid_argument);
  EXPECT_THROW(wedge(Tensor::basis(2, {0}), Tensor::basis(3, {0})), std::invalid_argument);
}

TEST(Contract, Examples) {
  const Vec e0s = vec({1, 0, 0}), e1s = vec({0, 1, 0});
  const std::vector<Vec> one{e0s};
  const std::vector<std::size_t> slot0{0};
  EXPECT_EQ(contract(one, bivector(3, 0, 1), slot0), Tensor::basis(3, {1}));
  const std::vector<Vec> two{e0s, e1s};
  const std::vector<std::size_t> slots01{0, 1};
  EXPECT_EQ(contract(two, oracle::alt(Tensor::basis(3, {0, 1, 2})), slots01), Tensor::basis(3, {2}));
  const std::vector<Vec> zeros(3, zero_vector(3));
  EXPECT_EQ(pair(zeros, testing_support::trivector(3, 0, 1, 2)), Rational(0));
}

TEST(Contract, MatchesOraclePairing) {
  Sampler s(5);
  for (int t = 0; t < 30; ++t) {
    const Tensor x = s.tensor(3, 3);
    const std::vector<Vec> ls{s.vector(3), s.vector(3), s.vector(3)};
    EXPECT_EQ(pair(ls, x), oracle::pair(ls, x));
    const std::vector<std::size_t> slot2{2};
    const std::vector<Vec> l2{ls[2]};
    const Tensor partial = contract(l2, x, slot2);
    EXPECT_EQ(oracle::pair({ls[0], ls[1]}, partial), pair(ls, x));
  }
}

TEST(Contract, SlotErrors) {
  const std::vector<Vec> one{vec({1, 0})};
  const std::vector<std::size_t> bad{2};
  EXPECT_THROW(contract(one, bivector(2, 0, 1), bad), std::out_of_range);
  const std::vector<Vec> two{vec({1, 0}), vec({0, 1})};
  const std::vector<std::size_t> dup{0, 0};
  EXPECT_THROW(contract(two, bivector(2, 0, 1), dup), std::invalid_argument);
}

TEST(ProjectQuotient, Examples) {
  EXPECT_TRUE(project_quotient(bivector(2, 0, 1), Subspace::span(2, {vec({1, 0})})).is_zero());
  const Tensor r = bivector(3, 0, 2, 5);
  EXPECT_EQ(project_quotient(r, Subspace(3)), r);
  EXPECT_TRUE(project_quotient(testing_support::trivector(3, 0, 1, 2), Subspace::span(3, {vec({0, 0, 1})})).is_zero());
}

TEST(ProjectQuotient, CommutesWithAlt) {
  Sampler s(6);
  const std::vector<Subspace> hs{Subspace::span(4, {vec({1, 0, 0, 0})}),
                                 Subspace::span(4, {vec({1, 1, 0, 0}), vec({0, 0, 1, -1})}),
                                 Subspace::span(4, {vec({0, 2, 1, 0})})};
  for (const auto& h : hs)
    for (std::size_t k = 2; k <= 3; ++k) {
      const Tensor t = s.tensor(4, k);
      EXPECT_EQ(project_quotient(alt(t), h), alt(project_quotient(t, h)));
    }
}

TEST(ProjectQuotient, LiftThenProjectIsIdentity) {
  Sampler s(7);
  const Subspace h = Subspace::span(4, {vec({1, 1, 0, 0})});
  const Tensor t = s.tensor(3, 2);
  EXPECT_EQ(project_quotient(lift_quotient(t, h), h), t);
}

TEST(Tensor, AntisymmetricFlagIsACertificate) {
  Tensor t(3, 2);
  t.at({0, 1}) = 1;
  EXPECT_FALSE(t.check_antisymmetric());
  EXPECT_THROW(t.mark_antisymmetric(), std::invalid_argument);
  t.at({1, 0}) = -1;
  EXPECT_NO_THROW(t.mark_antisymmetric());
  EXPECT_TRUE(t.antisymmetric());
  t.at({0, 2}) = 1;  // mutable access drops the certificate
  EXPECT_FALSE(t.antisymmetric());
}

TEST(Tensor, CycleMovesLastSlotFirst) {
  // τ(x ⊗ y ⊗ z) = z ⊗ x ⊗ y
  EXPECT_EQ(cycle3(Tensor::basis(3, {0, 1, 2})), Tensor::basis(3, {2, 0, 1}));
}
