#include "qpoisson/double_algebra.hpp"

#include <stdexcept>

namespace qpoisson {

namespace {

std::vector<std::string> double_labels(const LieAlgebra& g) {
  std::vector<std::string> labels = g.labels();
  for (const auto& l : g.labels()) labels.push_back(l + "*");
  return labels;
}

}  // namespace

DoubleAlgebra::DoubleAlgebra(QuasiBialgebra source, LieAlgebra algebra, Matrix q)
    : source_(std::move(source)), algebra_(std::move(algebra)), q_(std::move(q)) {
  if (algebra_.dim() != 2 * source_.dim() || q_.rows() != algebra_.dim() || q_.cols() != algebra_.dim())
    throw std::invalid_argument("double dimensions are inconsistent");
}

DoubleAlgebra build_double(const QuasiBialgebra& qb) {
  const std::size_t n = qb.dim();
  const std::size_t N = 2 * n;
  const LieAlgebra& g = qb.algebra;
  const Tensor& d = qb.delta.components();
  Tensor c(N, 3);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (v.is_zero()) return;
    c.at({i, j, k}) += v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // rule 1
        put(i, j, k, g.constant(i, j, k));
        // rule 2: [e^i, e^j] = Σ_k d[k][i][j] e^k - Σ_k φ[i][j][k] e_k
        put(n + i, n + j, n + k, d.at({k, i, j}));
        put(n + i, n + j, k, -qb.phi.at({i, j, k}));
        // rule 3: [e_i, e^j] = -Σ_m c[i][m][j] e^m + Σ_k d[i][j][k] e_k
        const Rational coad = -g.constant(i, k, j);
        put(i, n + j, n + k, coad);
        put(n + j, i, n + k, -coad);
        put(i, n + j, k, d.at({i, j, k}));
        put(n + j, i, k, -d.at({i, j, k}));
      }
    }
  Matrix q(N, N);
  for (std::size_t i = 0; i < n; ++i) {
    q(i, n + i) = 1;
    q(n + i, i) = 1;
  }
  return DoubleAlgebra(qb, LieAlgebra(std::move(c), double_labels(g)), std::move(q));
}

Rational DoubleAlgebra::q(std::span<const Rational> u, std::span<const Rational> v) const {
  const std::size_t n = half_dim();
  if (u.size() != 2 * n || v.size() != 2 * n) throw std::invalid_argument("Q argument dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < n; ++i) {
    s.add_product(u[n + i], v[i]);
    s.add_product(v[n + i], u[i]);
  }
  return s;
}

Rational q_form(const DoubleAlgebra& d, std::span<const Rational> u, std::span<const Rational> v) { return d.q(u, v); }

Vec DoubleAlgebra::embed_g(std::span<const Rational> a) const {
  Vec u(dim());
  for (std::size_t i = 0; i < half_dim(); ++i) u[i] = a[i];
  return u;
}

Vec DoubleAlgebra::embed_dual(std::span<const Rational> l) const {
  Vec u(dim());
  for (std::size_t i = 0; i < half_dim(); ++i) u[half_dim() + i] = l[i];
  return u;
}

Vec DoubleAlgebra::g_part(std::span<const Rational> u) const { return Vec(u.begin(), u.begin() + half_dim()); }

Vec DoubleAlgebra::dual_part(std::span<const Rational> u) const {
  return Vec(u.begin() + half_dim(), u.begin() + dim());
}

Subspace DoubleAlgebra::g_subspace() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < half_dim(); ++i) idx.push_back(i);
  return Subspace::coordinate(dim(), idx);
}

Subspace DoubleAlgebra::dual_subspace() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < half_dim(); ++i) idx.push_back(half_dim() + i);
  return Subspace::coordinate(dim(), idx);
}

Subspace DoubleAlgebra::meet_g(const Subspace& l) const {
  const Subspace m = intersect(l, g_subspace());
  std::vector<Vec> rows;
  for (const auto& b : m.basis()) rows.push_back(g_part(b));
  return Subspace::span(half_dim(), rows);
}

Subspace DoubleAlgebra::embed_g(const Subspace& h) const {
  if (h.ambient() != half_dim()) throw std::invalid_argument("subspace does not live in g");
  std::vector<Vec> rows;
  for (const auto& b : h.basis()) rows.push_back(embed_g(b));
  return Subspace::span(dim(), rows);
}

Verdict check_q_invariance(const DoubleAlgebra& d) {
  const std::size_t N = d.dim();
  const LieAlgebra& a = d.algebra();
  const Matrix& q = d.q_matrix();
  // Q([e_x, e_y], e_z) + Q(e_y, [e_x, e_z]) = Σ_m c[x][y][m] Q[m][z] + c[x][z][m] Q[y][m]
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = y; z < N; ++z) {
        Rational s;
        for (std::size_t m = 0; m < N; ++m) {
          s.add_product(a.constant(x, y, m), q(m, z));
          s.add_product(a.constant(x, z, m), q(y, m));
        }
        if (!s.is_zero()) {
          Tensor res(1, 0);
          res.flat(0) = s;
          return Verdict::fail({x, y, z}, res, "Q is not invariant");
        }
      }
  return Verdict::ok();
}

DoubleAxiomReport check_double_axioms(const DoubleAlgebra& d) {
  return {check_jacobi(d.algebra()), check_q_invariance(d)};
}

bool is_isotropic(const DoubleAlgebra& d, const Subspace& l) {
  if (l.ambient() != d.dim()) throw std::invalid_argument("subspace does not live in the double");
  const auto& b = l.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (!d.q(b[i], b[j]).is_zero()) return false;
  return true;
}

bool is_lagrangian(const DoubleAlgebra& d, const Subspace& l) {
  return l.dim() == d.half_dim() && is_isotropic(d, l);
}

Verdict is_subalgebra(const DoubleAlgebra& d, const Subspace& l) {
  if (l.ambient() != d.dim()) throw std::invalid_argument("subspace does not live in the double");
  return check_closed(d.algebra(), l);
}

Matrix r_matrix(const Tensor& r) {
  if (r.degree() != 2) throw std::invalid_argument("r_matrix expects a 2-tensor");
  const std::size_t n = r.dim();
  Matrix m(n, n);
  // R(e^i)_j = r[i][j]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = r.at({i, j});
  return m;
}

Subspace lagrangian_from_bivector(const Tensor& r) {
  if (!r.check_antisymmetric()) throw std::invalid_argument("lagrangian_from_bivector requires an antisymmetric r");
  const std::size_t n = r.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(2 * n);
    for (std::size_t j = 0; j < n; ++j) u[j] = r.at({i, j});
    u[n + i] = 1;
    rows.push_back(std::move(u));
  }
  return Subspace::span(2 * n, rows);
}

Tensor bivector_from_lagrangian(const DoubleAlgebra& d, const Subspace& l, const Subspace& h) {
  const std::size_t n = d.half_dim();
  if (!is_lagrangian(d, l)) throw std::invalid_argument("not Lagrangian");
  if (d.meet_g(l) != h) throw std::invalid_argument("L∩g ≠ h");
  const Matrix p = quotient_map(h);
  const std::size_t q = p.rows();
  // The quotient dual basis is l_i = row i of p, an element of h^⊥. Find an
  // element a + l_i of L; v[i][j] = ⟨l_j, a⟩ = (p a)_j.
  // Solve for L-coordinates: columns of the system are L's basis vectors
  // restricted to the dual part.
  const auto& basis = l.basis();
  Matrix sys(n, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t k = 0; k < n; ++k) sys(k, b) = basis[b][n + k];
  Tensor v(q, 2);
  for (std::size_t i = 0; i < q; ++i) {
    Matrix aug(n, basis.size() + 1);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t b = 0; b < basis.size(); ++b) aug(k, b) = sys(k, b);
      aug(k, basis.size()) = p(i, k);
    }
    std::vector<std::size_t> piv;
    const Matrix red = rref(aug, &piv);
    if (!piv.empty() && piv.back() == basis.size())
      throw std::invalid_argument("L does not project onto h^⊥");
    Vec coeff(basis.size());
    for (std::size_t r = 0; r < piv.size(); ++r) coeff[piv[r]] = red(r, basis.size());
    Vec a(n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t k = 0; k < n; ++k) a[k].add_product(coeff[b], basis[b][k]);
    const Vec pa = p.apply(a);
    for (std::size_t j = 0; j < q; ++j) v.at({i, j}) = pa[j];
  }
  return v.mark_antisymmetric();
}

}  // namespace qpoisson
