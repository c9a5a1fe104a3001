#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "qpoisson/matrix.hpp"
#include "qpoisson/tensor.hpp"
#include "qpoisson/verdict.hpp"

namespace qpoisson {

/// One bracket entry [e_i, e_j] ∋ value · e_k.
struct StructureEntry {
  std::size_t i, j, k;
  Rational value;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = Σ_k c[i][j][k] e_k.
///
/// Construction enforces antisymmetry in (i, j). The Jacobi identity is not
/// enforced (doubles of broken sources must still be representable); use
/// check_jacobi.
class LieAlgebra {
public:
  LieAlgebra() : LieAlgebra(0) {}
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});
  LieAlgebra(Tensor structure, std::vector<std::string> labels = {});

  /// Builds from entries with i < j; [e_j, e_i] is completed by antisymmetry.
  static LieAlgebra from_entries(std::size_t dim, const std::vector<StructureEntry>& entries,
                                 std::vector<std::string> labels = {});
  static LieAlgebra abelian(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const Tensor& structure() const { return c_; }
  [[nodiscard]] const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_.flat((i * dim_ + j) * dim_ + k);
  }

  [[nodiscard]] Vec bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  /// [e_i, e_j] as a vector.
  [[nodiscard]] Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Matrix of ad_x: column i is [x, e_i].
  [[nodiscard]] Matrix ad(std::span<const Rational> x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_ && a.labels_ == b.labels_;
  }

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  Tensor c_;
};

/// Pass iff Σ_cyclic [[e_i, e_j], e_k] = 0 for all i < j < k.
Verdict check_jacobi(const LieAlgebra& g);

/// Is the subspace closed under the bracket? Witness: echelon-basis pair.
Verdict check_closed(const LieAlgebra& g, const class Subspace& s);

/// Leibniz extension of ad_x to degree-k tensors:
/// ad_x(y ⊗ z ⊗ ...) = [x, y] ⊗ z ⊗ ... + y ⊗ [x, z] ⊗ ... + ...
Tensor ad_multi(const LieAlgebra& g, std::span<const Rational> x, const Tensor& t);

/// ⟨coad_a l, b⟩ = -⟨l, [a, b]⟩.
Vec coad_a(const LieAlgebra& g, std::span<const Rational> a, std::span<const Rational> l);

/// The three-term expression [r12, r13] + [r12, r23] + [r13, r23] in g⊗g⊗g.
///
/// Accepts any 2-tensor (the Manin construction feeds it a symmetric one);
/// the result carries the antisymmetric flag only if it checks out.
Tensor cyb(const LieAlgebra& g, const Tensor& r);

/// The individual terms of cyb, exposed for pairing identities.
Tensor cyb_12_13(const LieAlgebra& g, const Tensor& r);
Tensor cyb_12_23(const LieAlgebra& g, const Tensor& r);
Tensor cyb_13_23(const LieAlgebra& g, const Tensor& r);

}  // namespace qpoisson
