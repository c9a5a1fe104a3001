#pragma once

#include "qpoisson/lie_algebra.hpp"
#include "qpoisson/quasi_bialgebra.hpp"
#include "qpoisson/subspace.hpp"

namespace qpoisson {

/// The double D(g) = g ⊕ g* of a quasi-bialgebra.
///
/// Basis order is (e_0, ..., e_{n-1}, e^0, ..., e^{n-1}); e^i sits at
/// coordinate n + i, so the form Q is the block-antidiagonal identity.
/// Brackets:
///   [a, b]  = [a, b]_g
///   [l, m]  = [l, m]_δ - (l ⊗ m ⊗ id) φ
///   [a, l]  = coad_a l - coad_l a
class DoubleAlgebra {
public:
  DoubleAlgebra(QuasiBialgebra source, LieAlgebra algebra, Matrix q);

  [[nodiscard]] std::size_t half_dim() const { return source_.dim(); }
  [[nodiscard]] std::size_t dim() const { return algebra_.dim(); }
  [[nodiscard]] const QuasiBialgebra& source() const { return source_; }
  [[nodiscard]] const LieAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const Matrix& q_matrix() const { return q_; }

  [[nodiscard]] Vec bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    return algebra_.bracket(u, v);
  }
  [[nodiscard]] Rational q(std::span<const Rational> u, std::span<const Rational> v) const;

  /// a ∈ g as a vector of D.
  [[nodiscard]] Vec embed_g(std::span<const Rational> a) const;
  /// l ∈ g* as a vector of D.
  [[nodiscard]] Vec embed_dual(std::span<const Rational> l) const;
  [[nodiscard]] Vec g_part(std::span<const Rational> u) const;
  [[nodiscard]] Vec dual_part(std::span<const Rational> u) const;

  [[nodiscard]] Subspace g_subspace() const;
  [[nodiscard]] Subspace dual_subspace() const;
  /// L ∩ g, expressed as a subspace of g.
  [[nodiscard]] Subspace meet_g(const Subspace& l) const;
  /// Lifts a subspace of g into D.
  [[nodiscard]] Subspace embed_g(const Subspace& h) const;

private:
  QuasiBialgebra source_;
  LieAlgebra algebra_;
  Matrix q_;
};

DoubleAlgebra build_double(const QuasiBialgebra& qb);

/// Q(a + l, b + m) = ⟨l, b⟩ + ⟨m, a⟩.
Rational q_form(const DoubleAlgebra& d, std::span<const Rational> u, std::span<const Rational> v);

struct DoubleAxiomReport {
  Verdict jacobi;
  Verdict invariance;
  [[nodiscard]] bool pass() const { return jacobi.pass && invariance.pass; }
};

/// Jacobi identity and Q([x,y],z) + Q(y,[x,z]) = 0 at all basis triples.
DoubleAxiomReport check_double_axioms(const DoubleAlgebra& d);
Verdict check_q_invariance(const DoubleAlgebra& d);

bool is_isotropic(const DoubleAlgebra& d, const Subspace& l);
bool is_lagrangian(const DoubleAlgebra& d, const Subspace& l);
/// [u, v] ∈ L for all echelon-basis pairs; witness = the failing pair.
Verdict is_subalgebra(const DoubleAlgebra& d, const Subspace& l);

/// R(l) = (l ⊗ id) r, as a map g* -> g: column i is R(e^i).
Matrix r_matrix(const Tensor& r);

/// L_r = {R(l) + l : l ∈ g*}, always Lagrangian and transversal to g.
Subspace lagrangian_from_bivector(const Tensor& r);

/// Inverse of v ↦ L_v: for a Lagrangian L with L ∩ g = h, the bivector
/// v ∈ ∧²(g/h) (quotient based on h's non-pivot coordinates) with L = L_v.
/// Throws std::invalid_argument("not Lagrangian") or ("L∩g ≠ h").
Tensor bivector_from_lagrangian(const DoubleAlgebra& d, const Subspace& l, const Subspace& h);

}  // namespace qpoisson
