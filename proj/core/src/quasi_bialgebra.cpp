#include "qpoisson/quasi_bialgebra.hpp"

#include <stdexcept>

namespace qpoisson {

Cocycle::Cocycle(Tensor d) : d_(std::move(d)) {
  if (d_.degree() != 3) throw std::invalid_argument("cocycle components must form a degree-3 tensor");
  const std::size_t n = d_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        if (d_.at({i, j, k}) != -d_.at({i, k, j}))
          throw std::invalid_argument("cocycle image is not antisymmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
}

Cocycle Cocycle::coboundary(const LieAlgebra& g, const Tensor& r) {
  const std::size_t n = g.dim();
  Tensor d(n, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor img = ad_multi(g, unit_vector(n, i), r);
    for (std::size_t f = 0; f < img.size(); ++f) d.flat(i * n * n + f) = img.flat(f);
  }
  return Cocycle(std::move(d));
}

Tensor Cocycle::operator()(std::span<const Rational> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw std::invalid_argument("cocycle argument dimension mismatch");
  Tensor out(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t f = 0; f < n * n; ++f) out.flat(f).add_product(x[i], d_.flat(i * n * n + f));
  }
  return out.mark_antisymmetric();
}

QuasiBialgebra::QuasiBialgebra(LieAlgebra g, Cocycle d, Tensor p)
    : algebra(std::move(g)), delta(std::move(d)), phi(std::move(p)) {
  if (delta.dim() != algebra.dim()) throw std::invalid_argument("cocycle dimension does not match algebra");
  if (phi.dim() != algebra.dim() || phi.degree() != 3) throw std::invalid_argument("phi must be a 3-tensor over the algebra");
  phi.mark_antisymmetric();
}

Vec bracket_delta(const Cocycle& delta, std::span<const Rational> l, std::span<const Rational> m) {
  const std::size_t n = delta.dim();
  if (l.size() != n || m.size() != n) throw std::invalid_argument("bracket_delta dimension mismatch");
  const Tensor& d = delta.components();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (l[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = d.flat((i * n + j) * n + k);
        if (c.is_zero() || m[k].is_zero()) continue;
        out[i] += l[j] * m[k] * c;
      }
    }
  return out;
}

Vec coad_l(const Cocycle& delta, std::span<const Rational> l, std::span<const Rational> a) {
  const std::size_t n = delta.dim();
  if (l.size() != n || a.size() != n) throw std::invalid_argument("coad_l dimension mismatch");
  const Tensor& d = delta.components();
  // (coad_l a)_k = -Σ_{i,j} a_i l_j d[i][j][k]
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (l[j].is_zero()) continue;
      const Rational w = a[i] * l[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = d.flat((i * n + j) * n + k);
        if (!c.is_zero()) out[k] -= w * c;
      }
    }
  }
  return out;
}

Tensor apply_delta_first(const Cocycle& delta, const Tensor& t) {
  const std::size_t n = delta.dim();
  if (t.dim() != n || t.degree() == 0) throw std::invalid_argument("apply_delta_first shape mismatch");
  const std::size_t rest = t.size() / n;  // n^(k-1)
  const Tensor& d = delta.components();
  Tensor out(n, t.degree() + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t tail = 0; tail < rest; ++tail) {
      const Rational& c = t.flat(i * rest + tail);
      if (c.is_zero()) continue;
      for (std::size_t jk = 0; jk < n * n; ++jk) {
        const Rational& dv = d.flat(i * n * n + jk);
        if (dv.is_zero()) continue;
        out.flat(jk * rest + tail).add_product(c, dv);
      }
    }
  return out;
}

Tensor half_alt_delta(const Cocycle& delta, const Tensor& r) {
  if (r.degree() != 2) throw std::invalid_argument("half_alt_delta expects a 2-tensor");
  Tensor out = alt(apply_delta_first(delta, r));
  out *= Rational(1, 2);
  return out;
}

Verdict check_cocycle(const LieAlgebra& g, const Cocycle& delta) {
  const std::size_t n = g.dim();
  if (delta.dim() != n) throw std::invalid_argument("cocycle dimension does not match algebra");
  std::vector<Tensor> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(delta(unit_vector(n, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Tensor lhs = delta(g.bracket_basis(i, j));
      lhs -= ad_multi(g, unit_vector(n, i), images[j]);
      lhs += ad_multi(g, unit_vector(n, j), images[i]);
      if (!lhs.is_zero()) return Verdict::fail({i, j}, lhs, "cocycle condition fails");
    }
  return Verdict::ok();
}

Verdict check_quasi_cojacobi(const QuasiBialgebra& qb) {
  const std::size_t n = qb.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = unit_vector(n, i);
    Tensor lhs = alt(apply_delta_first(qb.delta, qb.delta(x)));
    lhs *= Rational(1, 2);
    lhs -= ad_multi(qb.algebra, x, qb.phi);
    if (!lhs.is_zero()) return Verdict::fail({i}, lhs, "quasi co-Jacobi identity fails");
  }
  return Verdict::ok();
}

Verdict check_pentagon(const QuasiBialgebra& qb) {
  const Tensor t = alt(apply_delta_first(qb.delta, qb.phi));
  for (std::size_t f = 0; f < t.size(); ++f)
    if (!t.flat(f).is_zero()) return Verdict::fail(t.multi_index(f), t, "Alt(δ⊗id⊗id)φ is nonzero");
  return Verdict::ok();
}

AxiomReport check_axioms(const QuasiBialgebra& qb) {
  return {check_jacobi(qb.algebra), check_cocycle(qb.algebra, qb.delta), check_quasi_cojacobi(qb),
          check_pentagon(qb)};
}

}  // namespace qpoisson
