#pragma once

#include <span>

#include "qpoisson/lie_algebra.hpp"
#include "qpoisson/tensor.hpp"
#include "qpoisson/verdict.hpp"

namespace qpoisson {

/// A linear map δ: g -> g ∧ g stored as d[i][j][k], δ(e_i) = Σ d[i][j][k] e_j ⊗ e_k.
/// Construction enforces d[i][j][k] = -d[i][k][j]; the cocycle condition is
/// checked separately.
class Cocycle {
public:
  explicit Cocycle(std::size_t dim = 0) : d_(dim, 3) {}
  explicit Cocycle(Tensor d);
  /// δ(x) = ad_x r.
  static Cocycle coboundary(const LieAlgebra& g, const Tensor& r);

  [[nodiscard]] std::size_t dim() const { return d_.dim(); }
  [[nodiscard]] const Tensor& components() const { return d_; }
  [[nodiscard]] Tensor operator()(std::span<const Rational> x) const;
  [[nodiscard]] bool is_zero() const { return d_.is_zero(); }

  friend Cocycle operator+(const Cocycle& a, const Cocycle& b) { return Cocycle(a.d_ + b.d_); }
  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.d_ == b.d_; }

private:
  Tensor d_;
};

/// A triple (g, δ, φ) with φ ∈ ∧³g. Axioms are reported by the check_*
/// functions rather than enforced, so that broken triples can be studied.
struct QuasiBialgebra {
  QuasiBialgebra() = default;
  QuasiBialgebra(LieAlgebra algebra, Cocycle delta, Tensor phi);

  LieAlgebra algebra;
  Cocycle delta;
  Tensor phi{0, 3};

  [[nodiscard]] std::size_t dim() const { return algebra.dim(); }
  friend bool operator==(const QuasiBialgebra& a, const QuasiBialgebra& b) {
    return a.algebra == b.algebra && a.delta == b.delta && a.phi == b.phi;
  }
};

/// [l, m]_δ with ⟨[l, m]_δ, e_i⟩ = ⟨l ⊗ m, δ(e_i)⟩.
Vec bracket_delta(const Cocycle& delta, std::span<const Rational> l, std::span<const Rational> m);
/// ⟨coad_l a, m⟩ = -⟨[l, m]_δ, a⟩.
Vec coad_l(const Cocycle& delta, std::span<const Rational> l, std::span<const Rational> a);

/// (δ ⊗ id ⊗ ... ⊗ id) t: applies δ to the first slot; degree grows by one.
Tensor apply_delta_first(const Cocycle& delta, const Tensor& t);
/// ½ Alt((δ ⊗ id) r).
Tensor half_alt_delta(const Cocycle& delta, const Tensor& r);

/// δ([x, y]) = ad_x δ(y) - ad_y δ(x) on basis pairs; witness (i, j).
Verdict check_cocycle(const LieAlgebra& g, const Cocycle& delta);
/// ½ Alt(δ ⊗ id) δ(e_i) = ad_{e_i} φ for every basis vector; witness (i).
Verdict check_quasi_cojacobi(const QuasiBialgebra& qb);
/// Alt(δ ⊗ id ⊗ id) φ = 0; witness = first nonzero 4-index.
Verdict check_pentagon(const QuasiBialgebra& qb);

struct AxiomReport {
  Verdict jacobi;
  Verdict cocycle;
  Verdict quasi_cojacobi;
  Verdict pentagon;
  [[nodiscard]] bool pass() const { return jacobi.pass && cocycle.pass && quasi_cojacobi.pass && pentagon.pass; }
};

/// Runs all four checks; none short-circuits the others.
AxiomReport check_axioms(const QuasiBialgebra& qb);

}  // namespace qpoisson
