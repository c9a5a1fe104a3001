#include "qpoisson/homogeneous.hpp"

#include <stdexcept>

namespace qpoisson {

HomDatum::HomDatum(QuasiBialgebra a, Subspace sub, Tensor bivector, std::string name)
    : algebra(std::move(a)), h(std::move(sub)), r(std::move(bivector)), label(std::move(name)) {
  if (h.ambient() != algebra.dim()) throw std::invalid_argument("h does not live in g");
  if (r.dim() != algebra.dim() || r.degree() != 2) throw std::invalid_argument("r must be a 2-tensor over g");
  r.mark_antisymmetric();
}

bool equivalent(const HomDatum& a, const HomDatum& b) {
  return a.algebra == b.algebra && a.h == b.h && project_quotient(a.r, a.h) == project_quotient(b.r, b.h);
}

Subspace graph_subspace(const Subspace& h, const Tensor& r) {
  const std::size_t n = h.ambient();
  if (r.dim() != n) throw std::invalid_argument("graph_subspace dimension mismatch");
  const Matrix rm = r_matrix(r);
  std::vector<Vec> rows;
  const Subspace ann = annihilator(h);
  for (const auto& l : ann.basis()) {
    Vec u(2 * n);
    const Vec rl = rm.apply(l);
    for (std::size_t k = 0; k < n; ++k) {
      u[k] = rl[k];
      u[n + k] = l[k];
    }
    rows.push_back(std::move(u));
  }
  for (const auto& a : h.basis()) {
    Vec u(2 * n);
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k];
    rows.push_back(std::move(u));
  }
  return Subspace::span(2 * n, rows);
}

Subspace dirac_subspace(const HomDatum& d) {
  if (!check_closed(d.algebra.algebra, d.h)) throw std::invalid_argument("h not a subalgebra");
  return graph_subspace(d.h, d.r);
}

Tensor obstruction(const HomDatum& d) {
  const auto& qb = d.algebra;
  Tensor t = qb.phi;
  t -= cyb(qb.algebra, d.r);
  t += half_alt_delta(qb.delta, d.r);
  return project_quotient(t, d.h);
}

std::vector<Tensor> stability_residuals(const HomDatum& d) {
  const auto& qb = d.algebra;
  std::vector<Tensor> out;
  for (const auto& a : d.h.basis()) {
    Tensor t = qb.delta(a);
    t += ad_multi(qb.algebra, a, d.r);
    out.push_back(project_quotient(t, d.h));
  }
  return out;
}

Verdict stable_by_bracket(const DoubleAlgebra& dbl, const HomDatum& d) {
  const Subspace l = graph_subspace(d.h, d.r);
  const auto& hb = d.h.basis();
  for (std::size_t i = 0; i < hb.size(); ++i) {
    const Vec a = dbl.embed_g(hb[i]);
    for (std::size_t j = 0; j < l.basis().size(); ++j) {
      Vec rem = l.reduce(dbl.bracket(a, l.basis()[j]));
      if (!is_zero(rem)) return Verdict::fail({i, j}, Tensor::from_vector(rem), "ad_a(L) escapes L");
    }
  }
  return Verdict::ok();
}

ClassificationReport is_quasi_poisson_datum(const HomDatum& d) {
  return is_quasi_poisson_datum(build_double(d.algebra), d);
}

ClassificationReport is_quasi_poisson_datum(const DoubleAlgebra& dbl, const HomDatum& d) {
  ClassificationReport rep;
  rep.h_closure = check_closed(d.algebra.algebra, d.h);
  rep.h_subalgebra = rep.h_closure.pass;
  rep.residuals = stability_residuals(d);
  rep.stable = true;
  for (const auto& t : rep.residuals) rep.stable = rep.stable && t.is_zero();
  rep.obstruction = obstruction(d);
  rep.obstruction_zero = rep.obstruction.is_zero();
  rep.dirac = graph_subspace(d.h, d.r);
  rep.lagrangian = is_lagrangian(dbl, rep.dirac);
  rep.meets_g_in_h = dbl.meet_g(rep.dirac) == d.h;
  rep.subalgebra_check = is_subalgebra(dbl, rep.dirac);
  rep.subalgebra = rep.subalgebra_check.pass;
  rep.verdict = rep.h_subalgebra && rep.stable && rep.lagrangian && rep.meets_g_in_h && rep.subalgebra;
  return rep;
}

}  // namespace qpoisson
