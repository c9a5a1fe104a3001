#pragma once

#include <string>
#include <vector>

#include "qpoisson/double_algebra.hpp"
#include "qpoisson/quasi_bialgebra.hpp"
#include "qpoisson/subspace.hpp"

namespace qpoisson {

/// Infinitesimal data of a homogeneous space at a base point: the isotropy
/// subalgebra h ⊂ g and a bivector r ∈ ∧²g whose image in ∧²(g/h) is the
/// value of the bivector field there. Only the class of r modulo
/// h∧g + g∧h matters.
struct HomDatum {
  QuasiBialgebra algebra;
  Subspace h;
  Tensor r;
  std::string label;

  HomDatum(QuasiBialgebra algebra, Subspace h, Tensor r, std::string label = {});
};

/// Two data are equivalent when they share algebra and h and their bivectors
/// agree in ∧²(g/h).
bool equivalent(const HomDatum& a, const HomDatum& b);

/// {l + R(l) : l ∈ h^⊥} + h, with no precondition on h.
Subspace graph_subspace(const Subspace& h, const Tensor& r);

/// L_x for the datum. Throws std::invalid_argument("h not a subalgebra").
Subspace dirac_subspace(const HomDatum& d);

/// Image of φ - CYB(r) + ½ Alt(δ⊗id) r in ∧³(g/h).
Tensor obstruction(const HomDatum& d);

/// For each echelon basis vector a of h, the image of δ(a) + ad_a r in ∧²(g/h).
///
/// This is the infinitesimal (ad_h-stability) form of the equivariance
/// condition; it is a derived reduction, so stable_by_bracket provides the
/// ground truth it is tested against.
std::vector<Tensor> stability_residuals(const HomDatum& d);

/// Direct test: [a, u]_D ∈ L_x for every a in h's basis and u in L_x's basis.
Verdict stable_by_bracket(const DoubleAlgebra& dbl, const HomDatum& d);

struct ClassificationReport {
  bool h_subalgebra = false;
  bool stable = false;           // all stability residuals vanish
  bool obstruction_zero = false;
  bool lagrangian = false;       // L_x Lagrangian
  bool meets_g_in_h = false;     // L_x ∩ g = h
  bool subalgebra = false;       // L_x closed in D
  bool verdict = false;

  Verdict h_closure;
  Verdict subalgebra_check;
  Tensor obstruction;
  std::vector<Tensor> residuals;
  Subspace dirac;
};

/// Runs every sub-check without short-circuiting. verdict holds iff L_x is a
/// Lagrangian subalgebra with L_x ∩ g = h, h is a subalgebra and the
/// stability residuals vanish.
ClassificationReport is_quasi_poisson_datum(const HomDatum& d);
ClassificationReport is_quasi_poisson_datum(const DoubleAlgebra& dbl, const HomDatum& d);

}  // namespace qpoisson
