#include "qpoisson/twisting.hpp"

#include <stdexcept>

namespace qpoisson {

namespace {

void require_bivector(const QuasiBialgebra& qb, const Tensor& r) {
  if (r.dim() != qb.dim() || r.degree() != 2) throw std::invalid_argument("r must be a 2-tensor over g");
  if (!r.check_antisymmetric()) throw std::invalid_argument("r must be antisymmetric");
}


}  // namespace

QuasiBialgebra twist(const QuasiBialgebra& qb, const Tensor& r) {
  require_bivector(qb, r);
  Cocycle delta = qb.delta + Cocycle::coboundary(qb.algebra, r);
  Tensor phi = qb.phi;
  phi += half_alt_delta(qb.delta, r);
  phi -= cyb(qb.algebra, r);
  return QuasiBialgebra(qb.algebra, std::move(delta), std::move(phi));
}

Matrix f_r_matrix(const QuasiBialgebra& qb, const Tensor& r) {
  require_bivector(qb, r);
  const std::size_t n = qb.dim();
  const Matrix rm = r_matrix(r);
  Matrix f = Matrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, n + j) = -rm(i, j);
  return f;
}

TwistReport check_twist_iso(const QuasiBialgebra& qb, const Tensor& r) {
  return check_twist_iso(qb, r, twist(qb, r));
}

TwistReport check_twist_iso(const QuasiBialgebra& qb, const Tensor& r, const QuasiBialgebra& target) {
  if (target.algebra != qb.algebra) throw std::invalid_argument("twist target must share the Lie algebra");
  TwistReport rep{qb, target, r, f_r_matrix(qb, r)};
  const DoubleAlgebra src = build_double(qb);
  const DoubleAlgebra dst = build_double(target);
  const std::size_t N = src.dim();
  const std::size_t n = qb.dim();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < N; ++i) images.push_back(rep.f.col_vec(i));

  rep.bracket_check = Verdict::ok();
  for (std::size_t i = 0; i < N && rep.bracket_check.pass; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const Vec lhs = rep.f.apply(src.algebra().bracket_basis(i, j));
      const Vec rhs = dst.bracket(images[i], images[j]);
      if (lhs != rhs) {
        rep.bracket_check = Verdict::fail({i, j}, Tensor::from_vector(sub(lhs, rhs)), "f_r does not preserve the bracket");
        break;
      }
    }
  rep.bracket_preserving = rep.bracket_check.pass;

  rep.form_preserving = true;
  for (std::size_t i = 0; i < N && rep.form_preserving; ++i)
    for (std::size_t j = i; j < N; ++j)
      if (dst.q(images[i], images[j]) != src.q(unit_vector(N, i), unit_vector(N, j))) {
        rep.form_preserving = false;
        break;
      }

  rep.fixes_g = true;
  for (std::size_t i = 0; i < n; ++i) rep.fixes_g = rep.fixes_g && images[i] == unit_vector(N, i);
  return rep;
}

CompositionReport compose_twists(const QuasiBialgebra& qb, const Tensor& r, const Tensor& s) {
  CompositionReport rep;
  const QuasiBialgebra stepwise = twist(twist(qb, r), s);
  const QuasiBialgebra direct = twist(qb, r + s);
  rep.delta_additive = stepwise.delta == direct.delta;
  rep.phi_discrepancy = stepwise.phi - direct.phi;
  rep.phi_additive = rep.phi_discrepancy.is_zero();
  rep.matrix_law = f_r_matrix(qb, s) * f_r_matrix(qb, r) == f_r_matrix(qb, r + s);
  return rep;
}

TwistedDatum twist_datum(const HomDatum& d, const Tensor& r) {
  HomDatum moved(twist(d.algebra, r), d.h, d.r - r, d.label);
  const Subspace old_l = graph_subspace(d.h, d.r);
  const Subspace new_l = graph_subspace(moved.h, moved.r);
  const bool carried = image(f_r_matrix(d.algebra, r), old_l) == new_l;
  const bool preserved = is_quasi_poisson_datum(d).verdict == is_quasi_poisson_datum(moved).verdict;
  return {std::move(moved), carried, preserved};
}

Tensor twist_residual(const QuasiBialgebra& qb, const Tensor& r) {
  require_bivector(qb, r);
  Tensor t = cyb(qb.algebra, r);
  t -= half_alt_delta(qb.delta, r);
  t -= qb.phi;
  return t;
}

Tensor bivector_from_coordinates(std::size_t dim, std::span<const Rational> coords) {
  if (coords.size() != dim * (dim == 0 ? 0 : dim - 1) / 2)
    throw std::invalid_argument("bivector coordinate count mismatch");
  Tensor r(dim, 2);
  std::size_t u = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j, ++u) {
      r.at({i, j}) = coords[u];
      r.at({j, i}) = -coords[u];
    }
  return r.mark_antisymmetric();
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  Rational s;
  for (const auto& m : monomials) {
    Rational t = m.coef;
    for (auto v : m.vars) t *= values[v];
    s += t;
  }
  return s;
}

std::vector<std::string> PolynomialSystem::unknown_names() const {
  std::vector<std::string> out;
  for (const auto& [i, j] : unknowns) out.push_back("r_" + std::to_string(i) + "_" + std::to_string(j));
  return out;
}

Vec PolynomialSystem::coordinates(const Tensor& r) const {
  Vec x;
  for (const auto& [i, j] : unknowns) x.push_back(r.at({i, j}));
  return x;
}

Vec PolynomialSystem::residual(const Tensor& r) const {
  const Vec x = coordinates(r);
  Vec out;
  for (const auto& eq : equations) out.push_back(eq.evaluate(x));
  return out;
}

PolynomialSystem twist_equations(const QuasiBialgebra& qb) {
  const std::size_t n = qb.dim();
  PolynomialSystem sys;
  sys.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sys.unknowns.push_back({i, j});
  const std::size_t m = sys.unknowns.size();

  // Unit bivectors E_u; CYB is a homogeneous quadratic in r, so its
  // coefficients are recovered exactly by polarization.
  std::vector<Tensor> units, cyb_units, lin_units;
  for (std::size_t u = 0; u < m; ++u) {
    Vec c(m);
    c[u] = 1;
    units.push_back(bivector_from_coordinates(n, c));
    cyb_units.push_back(cyb(qb.algebra, units.back()));
    lin_units.push_back(half_alt_delta(qb.delta, units.back()));
  }
  std::vector<std::vector<Tensor>> cross(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      cross[u].push_back(cyb(qb.algebra, units[u] + units[v]) - cyb_units[u] - cyb_units[v]);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial eq{{i, j, k}, {}};
        const Rational c0 = -qb.phi.at({i, j, k});
        if (!c0.is_zero()) eq.monomials.push_back({{}, c0});
        for (std::size_t u = 0; u < m; ++u) {
          const Rational c1 = -lin_units[u].at({i, j, k});
          if (!c1.is_zero()) eq.monomials.push_back({{u}, c1});
        }
        for (std::size_t u = 0; u < m; ++u) {
          const Rational sq = cyb_units[u].at({i, j, k});
          if (!sq.is_zero()) eq.monomials.push_back({{u, u}, sq});
          for (std::size_t v = u + 1; v < m; ++v) {
            const Rational cc = cross[u][v - u - 1].at({i, j, k});
            if (!cc.is_zero()) eq.monomials.push_back({{u, v}, cc});
          }
        }
        sys.equations.push_back(std::move(eq));
      }
  return sys;
}

}  // namespace qpoisson
