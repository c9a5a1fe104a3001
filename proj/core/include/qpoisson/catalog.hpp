#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpoisson/homogeneous.hpp"
#include "qpoisson/lie_algebra.hpp"
#include "qpoisson/quasi_bialgebra.hpp"
#include "qpoisson/subspace.hpp"

namespace qpoisson {

/// A Lie algebra with a nondegenerate invariant symmetric bilinear form B.
class QuadraticLieAlgebra {
public:
  /// Throws std::invalid_argument if B is not symmetric, degenerate, or not invariant.
  QuadraticLieAlgebra(LieAlgebra g, Matrix form);

  [[nodiscard]] const LieAlgebra& algebra() const { return g_; }
  [[nodiscard]] const Matrix& form() const { return b_; }
  /// Ω = B^{-1} as a symmetric 2-tensor.
  [[nodiscard]] Tensor casimir() const;
  /// x_l with B(x_l, y) = l(y).
  [[nodiscard]] Vec dual_to_vector(std::span<const Rational> l) const;
  [[nodiscard]] Rational pairing(std::span<const Rational> x, std::span<const Rational> y) const;

private:
  LieAlgebra g_;
  Matrix b_;
};

/// sl2 in the basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// so3 in the basis (x, y, z): [x,y] = z, [y,z] = x, [z,x] = y.
LieAlgebra so3();
/// aff(1) in the basis (x, y): [x,y] = y.
LieAlgebra aff1();
/// sl2 with B(x, y) = tr(xy) in the fundamental representation.
QuadraticLieAlgebra sl2_trace();
/// so3 with the identity form (minus half the Killing form).
QuadraticLieAlgebra so3_standard();

/// (g, 0, -CYB(Ω)) with Ω = B^{-1}. Throws std::logic_error if the resulting
/// φ fails to be antisymmetric or ad-invariant.
QuasiBialgebra manin_quasi_triple(const QuadraticLieAlgebra& q);

struct CatalogEntry {
  std::string name;
  QuasiBialgebra qb;
  std::vector<HomDatum> data;                  // point datum first, then h = 0 data
  std::vector<Subspace> subalgebras;           // fixed list used by randomized suites
  std::optional<QuadraticLieAlgebra> quadratic;
  std::string convention{};                    // basis convention, when one was chosen
};

/// Names accepted by builtin: abelian(n), aff1, sl2_coboundary,
/// sl2_invariant_phi(c), manin_sl2_trace, manin_so3.
/// Throws std::invalid_argument("unknown catalog entry: ...").
CatalogEntry builtin(std::string_view name);
/// Canonical names of the shipped fixtures.
std::vector<std::string> builtin_names();
/// File stem for a catalog name: "abelian(3)" -> "abelian_3".
std::string fixture_stem(std::string_view name);

struct ProductModelReport {
  LieAlgebra product;       // g × g
  Matrix product_form;      // ½((a|c) - (b|d))
  Matrix psi;               // D(g) -> g × g, ψ(a + l) = (a + x_l, a - x_l)
  bool bijective = false;
  bool bracket_preserved = false;
  bool form_matches = false;
  bool g_to_diagonal = false;
  bool dual_to_antidiagonal = false;
  Verdict bracket_check{};
  [[nodiscard]] bool pass() const {
    return bijective && bracket_preserved && form_matches && g_to_diagonal && dual_to_antidiagonal;
  }
};

ProductModelReport product_double_model(const QuadraticLieAlgebra& q);

/// g × g with the bracket of each factor.
LieAlgebra product_algebra(const LieAlgebra& g);
/// ½((a|c) - (b|d)) on g × g.
Matrix product_form(const QuadraticLieAlgebra& q);

Verdict check_automorphism(const LieAlgebra& g, const Matrix& a);
bool is_orthogonal(const QuadraticLieAlgebra& q, const Matrix& a);

/// {(x, Ax)} ⊂ g × g, no preconditions.
Subspace graph_subspace(const QuadraticLieAlgebra& q, const Matrix& a);

struct GraphLagrangian {
  Subspace subspace;        // {(x, Ax)}
  Subspace fixed;           // intersection with the diagonal, as a subspace of g
  bool lagrangian = false;
  bool subalgebra = false;
};

/// L = {(x, Ax)} for a B-orthogonal automorphism A. Throws
/// std::invalid_argument with a witness if A is not an automorphism or not
/// B-orthogonal.
GraphLagrangian graph_lagrangian(const QuadraticLieAlgebra& q, const Matrix& a);

}  // namespace qpoisson
