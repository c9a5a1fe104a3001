#include "qpoisson/lie_algebra.hpp"

#include <stdexcept>

#include "qpoisson/subspace.hpp"

namespace qpoisson {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != n) throw std::invalid_argument("label count does not match dimension");
  return labels;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(default_labels(dim, std::move(labels))), c_(dim, 3) {}

LieAlgebra::LieAlgebra(Tensor structure, std::vector<std::string> labels)
    : dim_(structure.dim()), labels_(default_labels(structure.dim(), std::move(labels))), c_(std::move(structure)) {
  if (c_.degree() != 3) throw std::invalid_argument("structure constants must form a degree-3 tensor");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != -constant(j, i, k))
          throw std::invalid_argument("structure constants are not antisymmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
}

LieAlgebra LieAlgebra::from_entries(std::size_t dim, const std::vector<StructureEntry>& entries,
                                    std::vector<std::string> labels) {
  Tensor c(dim, 3);
  for (const auto& [i, j, k, v] : entries) {
    if (i >= dim || j >= dim || k >= dim) throw std::out_of_range("structure entry index out of range");
    if (i >= j) throw std::invalid_argument("structure entries must have i < j");
    c.at({i, j, k}) += v;
    c.at({j, i, k}) -= v;
  }
  return LieAlgebra(std::move(c), std::move(labels));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim); }

Vec LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket dimension mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k].add_product(xy, constant(i, j, k));
    }
  }
  return out;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = constant(i, j, k);
  return out;
}

Matrix LieAlgebra::ad(std::span<const Rational> x) const {
  Matrix m(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) m(k, i).add_product(x[a], constant(a, i, k));
  }
  return m;
}

Verdict check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto nested = [&](std::size_t i, std::size_t j, std::size_t k, Vec& acc) {
    for (std::size_t m = 0; m < n; ++m) {
      const Rational& c = g.constant(i, j, m);
      if (c.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p) acc[p].add_product(c, g.constant(m, k, p));
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec acc(n);
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        if (!is_zero(acc)) return Verdict::fail({i, j, k}, Tensor::from_vector(acc), "Jacobi identity fails");
      }
  return Verdict::ok();
}

Verdict check_closed(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient() != g.dim()) throw std::invalid_argument("subspace ambient dimension does not match algebra");
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Vec r = s.reduce(g.bracket(b[i], b[j]));
      if (!is_zero(r)) return Verdict::fail({i, j}, Tensor::from_vector(r), "bracket leaves the subspace");
    }
  return Verdict::ok();
}

Tensor ad_multi(const LieAlgebra& g, std::span<const Rational> x, const Tensor& t) {
  if (t.dim() != g.dim()) throw std::invalid_argument("ad_multi dimension mismatch");
  if (t.degree() == 0) throw std::invalid_argument("ad_multi requires degree >= 1");
  const std::size_t n = g.dim();
  const Matrix adx = g.ad(x);
  Tensor out(n, t.degree());
  MultiIndex target;
  for (std::size_t f = 0; f < t.size(); ++f) {
    const Rational& c = t.flat(f);
    if (c.is_zero()) continue;
    const MultiIndex idx = t.multi_index(f);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      target = idx;
      for (std::size_t m = 0; m < n; ++m) {
        const Rational& a = adx(m, idx[s]);
        if (a.is_zero()) continue;
        target[s] = m;
        out.at(target).add_product(c, a);
      }
    }
  }
  if (t.antisymmetric()) out.mark_antisymmetric();
  return out;
}

Vec coad_a(const LieAlgebra& g, std::span<const Rational> a, std::span<const Rational> l) {
  const std::size_t n = g.dim();
  if (a.size() != n || l.size() != n) throw std::invalid_argument("coad_a dimension mismatch");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = g.constant(i, j, k);
        if (c.is_zero() || l[k].is_zero()) continue;
        out[j] -= a[i] * c * l[k];
      }
  }
  return out;
}

// With r = Σ r[a][b] e_a ⊗ e_b:
//   [r12, r13][p,q,s] = Σ r[a][q] r[b][s] c[a][b][p]
//   [r12, r23][p,q,s] = Σ r[p][a] r[b][s] c[a][b][q]
//   [r13, r23][p,q,s] = Σ r[p][a] r[q][b] c[a][b][s]
Tensor cyb_12_13(const LieAlgebra& g, const Tensor& r) {
  const std::size_t n = g.dim();
  Tensor out(n, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t p = 0; p < n; ++p) {
        const Rational& c = g.constant(a, b, p);
        if (c.is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          const Rational& raq = r.at({a, q});
          if (raq.is_zero()) continue;
          const Rational w = c * raq;
          for (std::size_t s = 0; s < n; ++s) out.at({p, q, s}).add_product(w, r.at({b, s}));
        }
      }
  return out;
}

Tensor cyb_12_23(const LieAlgebra& g, const Tensor& r) {
  const std::size_t n = g.dim();
  Tensor out(n, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational& c = g.constant(a, b, q);
        if (c.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p) {
          const Rational& rpa = r.at({p, a});
          if (rpa.is_zero()) continue;
          const Rational w = c * rpa;
          for (std::size_t s = 0; s < n; ++s) out.at({p, q, s}).add_product(w, r.at({b, s}));
        }
      }
  return out;
}

Tensor cyb_13_23(const LieAlgebra& g, const Tensor& r) {
  const std::size_t n = g.dim();
  Tensor out(n, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t s = 0; s < n; ++s) {
        const Rational& c = g.constant(a, b, s);
        if (c.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p) {
          const Rational& rpa = r.at({p, a});
          if (rpa.is_zero()) continue;
          const Rational w = c * rpa;
          for (std::size_t q = 0; q < n; ++q) out.at({p, q, s}).add_product(w, r.at({q, b}));
        }
      }
  return out;
}

Tensor cyb(const LieAlgebra& g, const Tensor& r) {
  if (r.dim() != g.dim() || r.degree() != 2) throw std::invalid_argument("cyb expects a 2-tensor over the algebra");
  Tensor out = cyb_12_13(g, r);
  out += cyb_12_23(g, r);
  out += cyb_13_23(g, r);
  if (out.check_antisymmetric()) out.mark_antisymmetric();
  return out;
}

}  // namespace qpoisson
