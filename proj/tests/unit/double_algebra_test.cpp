#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qpoisson/catalog.hpp"
#include "qpoisson/double_algebra.hpp"
#include "qpoisson/homogeneous.hpp"
#include "qpoisson/sampling.hpp"

using namespace qpoisson;
using testing_support::bivector;
using testing_support::trivector;
using testing_support::vec;

namespace {

constexpr std::size_t E = 0, H = 1, F = 2;

Vec dual_vec(std::size_t n, std::size_t i) { return unit_vector(2 * n, n + i); }

}  // namespace

TEST(BuildDouble, AbelianGivesAbelianDouble) {
  const QuasiBialgebra qb(LieAlgebra::abelian(3), Cocycle(3), Tensor(3, 3));
  const DoubleAlgebra d = build_double(qb);
  EXPECT_EQ(d.dim(), 6u);
  EXPECT_TRUE(d.algebra().structure().is_zero());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_EQ(d.q_matrix()(i, j), Rational((i + 3 == j || j + 3 == i) ? 1 : 0));
}

TEST(BuildDouble, MatchesPairingOracleOnCatalog) {
  Sampler s(41);
  for (const auto& e : testing_support::catalog_entries()) {
    const DoubleAlgebra d = build_double(e.qb);
    const std::size_t N = d.dim();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        EXPECT_EQ(d.bracket(unit_vector(N, i), unit_vector(N, j)),
                  oracle::double_bracket(e.qb, unit_vector(N, i), unit_vector(N, j)))
            << e.name << " " << i << "," << j;
  }
}

TEST(BuildDouble, MatchesPairingOracleOnBrokenSources) {
  Sampler s(42);
  for (int t = 0; t < 5; ++t) {
    Tensor d(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const Rational v = s.rational();
      d.at({i, 0, 2}) = v;
      d.at({i, 2, 0}) = -v;
    }
    const QuasiBialgebra qb(so3(), Cocycle(d), s.rational() * trivector(3, 0, 1, 2));
    const DoubleAlgebra dbl = build_double(qb);
    for (int k = 0; k < 10; ++k) {
      const Vec u = s.vector(6), v = s.vector(6);
      EXPECT_EQ(dbl.bracket(u, v), oracle::double_bracket(qb, u, v));
    }
  }
}

TEST(BuildDouble, RestrictsToG) {
  for (const auto& e : testing_support::catalog_entries()) {
    const DoubleAlgebra d = build_double(e.qb);
    const std::size_t n = e.qb.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(d.bracket(d.embed_g(unit_vector(n, i)), d.embed_g(unit_vector(n, j))),
                  d.embed_g(e.qb.algebra.bracket_basis(i, j)));
  }
}

TEST(BuildDouble, BialgebraDualIsSubalgebra) {
  for (const char* name : {"sl2_coboundary", "aff1", "abelian(3)"}) {
    const DoubleAlgebra d = build_double(builtin(name).qb);
    EXPECT_TRUE(is_subalgebra(d, d.dual_subspace()).pass) << name;
  }
}

TEST(BuildDouble, PhiGivesGComponentOnDualBrackets) {
  const QuasiBialgebra qb = builtin("sl2_invariant_phi(1)").qb;
  const DoubleAlgebra d = build_double(qb);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec b = d.bracket(dual_vec(3, i), dual_vec(3, j));
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(b[k], -qb.phi.at({i, j, k}));
    }
  EXPECT_FALSE(is_subalgebra(d, d.dual_subspace()).pass);
}

TEST(QForm, Examples) {
  const DoubleAlgebra d = build_double(builtin("sl2_coboundary").qb);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(q_form(d, unit_vector(6, i), dual_vec(3, j)), Rational(i == j ? 1 : 0));
      EXPECT_EQ(q_form(d, unit_vector(6, i), unit_vector(6, j)), Rational(0));
      EXPECT_EQ(q_form(d, dual_vec(3, i), dual_vec(3, j)), Rational(0));
    }
  Sampler s(43);
  for (int t = 0; t < 20; ++t) {
    const Vec u = s.vector(6), v = s.vector(6);
    EXPECT_EQ(q_form(d, u, v), q_form(d, v, u));
    EXPECT_EQ(q_form(d, u, v), oracle::q_form(3, u, v));
  }
}

TEST(DoubleAxioms, CatalogPasses) {
  for (const auto& e : testing_support::catalog_entries()) {
    const DoubleAxiomReport r = check_double_axioms(build_double(e.qb));
    EXPECT_TRUE(r.jacobi.pass) << e.name;
    EXPECT_TRUE(r.invariance.pass) << e.name;
  }
  EXPECT_TRUE(check_double_axioms(build_double(QuasiBialgebra(sl2(), Cocycle(3), trivector(3, E, H, F)))).pass());
}

TEST(DoubleAxioms, NonCocycleDeltaFailsJacobi) {
  const QuasiBialgebra good = builtin("sl2_coboundary").qb;
  Tensor d = good.delta.components();
  d.at({H, E, F}) += 1;
  d.at({H, F, E}) -= 1;
  const QuasiBialgebra bad(good.algebra, Cocycle(d), good.phi);
  EXPECT_FALSE(check_cocycle(bad.algebra, bad.delta).pass);
  const DoubleAxiomReport r = check_double_axioms(build_double(bad));
  EXPECT_FALSE(r.jacobi.pass);
  EXPECT_EQ(r.jacobi.witness.size(), 3u);
}

// Jacobi of the double holds exactly when the source satisfies the
// quasi-bialgebra axioms; every single-entry perturbation of δ or φ is tested.
TEST(DoubleAxioms, JacobiIffSourceAxiomsUnderPerturbation) {
  for (const auto& e : testing_support::catalog_entries()) {
    const std::size_t n = e.qb.dim();
    std::vector<QuasiBialgebra> variants;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Tensor d = e.qb.delta.components();
          d.at({i, j, k}) += 1;
          d.at({i, k, j}) -= 1;
          variants.emplace_back(e.qb.algebra, Cocycle(d), e.qb.phi);
        }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          variants.emplace_back(e.qb.algebra, e.qb.delta, e.qb.phi + trivector(n, i, j, k));
    for (const auto& qb : variants) {
      const bool axioms = oracle::cocycle(qb) && oracle::quasi_cojacobi(qb) && oracle::pentagon(qb);
      const bool jacobi = check_double_axioms(build_double(qb)).jacobi.pass;
      EXPECT_EQ(jacobi, axioms) << e.name;
      EXPECT_EQ(check_axioms(qb).pass(), axioms) << e.name;
    }
  }
}

TEST(DoubleAxioms, InvarianceHoldsWheneverDeltaIsACocycle) {
  Sampler s(44);
  const LieAlgebra g4 = product_algebra(aff1());
  for (int t = 0; t < 10; ++t) {
    const QuasiBialgebra qb(g4, Cocycle::coboundary(g4, s.bivector(4)), alt(s.tensor(4, 3)));
    const DoubleAxiomReport r = check_double_axioms(build_double(qb));
    EXPECT_TRUE(r.invariance.pass);
    if (t == 0) EXPECT_FALSE(check_quasi_cojacobi(qb).pass);  // genuinely outside the axioms
  }
}

TEST(Lagrangian, Examples) {
  const DoubleAlgebra d = build_double(builtin("sl2_coboundary").qb);
  EXPECT_TRUE(is_lagrangian(d, d.g_subspace()));
  EXPECT_TRUE(is_lagrangian(d, d.dual_subspace()));
  const Subspace bad = Subspace::span(6, {unit_vector(6, 0), dual_vec(3, 0)});
  EXPECT_FALSE(is_isotropic(d, bad));
  EXPECT_FALSE(is_lagrangian(d, bad));
  EXPECT_FALSE(is_lagrangian(d, Subspace::span(6, {unit_vector(6, 0)})));  // isotropic, too small
  EXPECT_THROW(is_isotropic(d, Subspace(4)), std::invalid_argument);
}

TEST(IsSubalgebra, Examples) {
  const DoubleAlgebra manin = build_double(builtin("manin_sl2_trace").qb);
  EXPECT_TRUE(is_subalgebra(manin, manin.g_subspace()).pass);
  const Verdict v = is_subalgebra(manin, manin.dual_subspace());
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witness.size(), 2u);
  const auto entry = builtin("sl2_coboundary");
  const DoubleAlgebra d = build_double(entry.qb);
  for (const auto& datum : entry.data) EXPECT_TRUE(is_subalgebra(d, dirac_subspace(datum)).pass) << datum.label;
}

TEST(LagrangianFromBivector, Examples) {
  const DoubleAlgebra d = build_double(builtin("sl2_coboundary").qb);
  EXPECT_EQ(lagrangian_from_bivector(Tensor(3, 2).mark_antisymmetric()), d.dual_subspace());
  const Subspace l = lagrangian_from_bivector(bivector(3, E, F));
  EXPECT_TRUE(l.contains(add(dual_vec(3, E), unit_vector(6, F))));
  EXPECT_TRUE(l.contains(sub(dual_vec(3, F), unit_vector(6, E))));
  EXPECT_TRUE(l.contains(dual_vec(3, H)));
}

TEST(LagrangianFromBivector, AlwaysLagrangianAndTransversal) {
  Sampler s(45);
  for (const auto& e : testing_support::catalog_entries()) {
    const DoubleAlgebra d = build_double(e.qb);
    for (int t = 0; t < 20; ++t) {
      const Subspace l = lagrangian_from_bivector(s.bivector(e.qb.dim()));
      EXPECT_TRUE(is_lagrangian(d, l));
      EXPECT_EQ(d.meet_g(l).dim(), 0u);
    }
  }
}

TEST(BivectorFromLagrangian, Examples) {
  const QuasiBialgebra qb = builtin("sl2_coboundary").qb;
  const DoubleAlgebra d = build_double(qb);
  EXPECT_EQ(bivector_from_lagrangian(d, d.g_subspace(), Subspace::full(3)), Tensor(0, 2));
  Sampler s(46);
  const Tensor r = s.bivector(3);
  EXPECT_EQ(bivector_from_lagrangian(d, lagrangian_from_bivector(r), Subspace(3)), r);
}

TEST(BivectorFromLagrangian, Errors) {
  const DoubleAlgebra d = build_double(builtin("sl2_coboundary").qb);
  EXPECT_THROW(bivector_from_lagrangian(d, Subspace::full(6), Subspace(3)), std::invalid_argument);
  EXPECT_THROW(bivector_from_lagrangian(d, d.g_subspace(), Subspace(3)), std::invalid_argument);
}

TEST(BivectorFromLagrangian, RoundTripOnRandomData) {
  Sampler s(47);
  for (const char* name : {"sl2_coboundary", "aff1"}) {
    const auto entry = builtin(name);
    const DoubleAlgebra d = build_double(entry.qb);
    for (int t = 0; t < 50; ++t) {
      const Subspace& h = entry.subalgebras[s.index(entry.subalgebras.size())];
      const Tensor r = s.bivector(entry.qb.dim());
      const HomDatum datum(entry.qb, h, r);
      const Tensor v = bivector_from_lagrangian(d, dirac_subspace(datum), h);
      EXPECT_EQ(v, project_quotient(r, h)) << name;
      EXPECT_EQ(graph_subspace(h, lift_quotient(v, h)), dirac_subspace(datum)) << name;
    }
  }
}

// The identities used to compute Q([l1+R(l1), l2+R(l2)], l3+R(l3)).
TEST(PairingIdentities, HoldForRandomInputs) {
  Sampler s(48);
  for (const auto& e : testing_support::catalog_entries()) {
    const std::size_t n = e.qb.dim();
    const DoubleAlgebra d = build_double(e.qb);
    for (int t = 0; t < 25; ++t) {
      const Tensor r = s.bivector(n);
      const Vec l1 = s.vector(n), l2 = s.vector(n), l3 = s.vector(n);
      const Matrix rm = r_matrix(r);
      auto dual = [&](const Vec& l) { return d.embed_dual(l); };
      auto R = [&](const Vec& l) { return d.embed_g(rm.apply(l)); };
      EXPECT_EQ(rm.apply(l1), oracle::r_map(r, l1));
      const std::vector<Vec> ls{l1, l2, l3};
      EXPECT_EQ(oracle::pair(ls, cyb_12_13(e.qb.algebra, r)), q_form(d, d.bracket(dual(l1), R(l2)), R(l3)));
      EXPECT_EQ(oracle::pair(ls, apply_delta_first(e.qb.delta, r)), -q_form(d, d.bracket(dual(l1), dual(l2)), R(l3)));
      EXPECT_EQ(oracle::pair(ls, e.qb.phi), -q_form(d, d.bracket(dual(l1), dual(l2)), dual(l3)));
      auto u = [&](const Vec& l) { return add(dual(l), R(l)); };
      const Tensor rhs = cyb(e.qb.algebra, r) - e.qb.phi - half_alt_delta(e.qb.delta, r);
      EXPECT_EQ(q_form(d, d.bracket(u(l1), u(l2)), u(l3)), oracle::pair(ls, rhs)) << e.name;
    }
  }
}
