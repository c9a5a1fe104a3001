#include "qpoisson/catalog.hpp"

#include <cctype>
#include <stdexcept>

#include "qpoisson/double_algebra.hpp"

namespace qpoisson {

namespace {

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

Tensor bivector(std::size_t n, std::size_t i, std::size_t j, const Rational& c = 1) {
  Tensor r(n, 2);
  r.at({i, j}) = c;
  r.at({j, i}) = -c;
  return r.mark_antisymmetric();
}

Tensor zero_bivector(std::size_t n) { return Tensor(n, 2).mark_antisymmetric(); }

std::vector<HomDatum> standard_data(const QuasiBialgebra& qb) {
  const std::size_t n = qb.dim();
  std::vector<HomDatum> out;
  out.emplace_back(qb, Subspace::full(n), zero_bivector(n), "point");
  out.emplace_back(qb, Subspace(n), zero_bivector(n), "h0_r0");
  return out;
}

std::vector<Subspace> sl2_subalgebras() {
  const std::size_t n = 3;  // (e, h, f)
  return {Subspace(n),
          Subspace::span(n, {vec({0, 1, 0})}),
          Subspace::span(n, {vec({1, 0, 0})}),
          Subspace::span(n, {vec({0, 0, 1})}),
          Subspace::span(n, {vec({1, 0, 1})}),
          Subspace::span(n, {vec({1, 0, 0}), vec({0, 1, 0})}),
          Subspace::span(n, {vec({0, 1, 0}), vec({0, 0, 1})}),
          Subspace::full(n)};
}

CatalogEntry make_abelian(std::size_t n, std::string name) {
  if (n == 0) throw std::invalid_argument("abelian(n) requires n >= 1");
  QuasiBialgebra qb(LieAlgebra::abelian(n), Cocycle(n), Tensor(n, 3));
  CatalogEntry e{std::move(name), qb, standard_data(qb), {}, std::nullopt};
  e.subalgebras = {Subspace(n), Subspace::full(n), Subspace::span(n, {unit_vector(n, 0)})};
  if (n >= 2) e.subalgebras.push_back(Subspace::span(n, {add(unit_vector(n, 0), unit_vector(n, 1))}));
  if (n >= 3)
    e.subalgebras.push_back(Subspace::span(n, {add(unit_vector(n, 0), unit_vector(n, 1)), unit_vector(n, 2)}));
  return e;
}

CatalogEntry make_aff1() {
  const LieAlgebra g = aff1();
  QuasiBialgebra qb(g, Cocycle::coboundary(g, bivector(2, 0, 1)), Tensor(2, 3));
  CatalogEntry e{"aff1", qb, standard_data(qb), {}, std::nullopt};
  e.data.emplace_back(qb, Subspace(2), bivector(2, 0, 1), "left_translations");
  e.subalgebras = {Subspace(2), Subspace::span(2, {vec({1, 0})}), Subspace::span(2, {vec({0, 1})}),
                   Subspace::span(2, {vec({1, 1})}), Subspace::full(2)};
  return e;
}

CatalogEntry make_sl2_coboundary() {
  const LieAlgebra g = sl2();
  QuasiBialgebra qb(g, Cocycle::coboundary(g, bivector(3, 0, 2)), Tensor(3, 3));
  CatalogEntry e{"sl2_coboundary", qb, standard_data(qb), sl2_subalgebras(), std::nullopt};
  e.data.emplace_back(qb, Subspace::span(3, {vec({0, 1, 0})}), bivector(3, 0, 2), "cartan");
  return e;
}

CatalogEntry make_sl2_invariant_phi(const Rational& c, std::string name) {
  // φ = c · e ∧ h ∧ f = c · Alt(e ⊗ h ⊗ f)
  Tensor phi(3, 3);
  phi.at({0, 1, 2}) = c;
  QuasiBialgebra qb(sl2(), Cocycle(3), alt(phi));
  return CatalogEntry{std::move(name), qb, standard_data(qb), sl2_subalgebras(), std::nullopt};
}

CatalogEntry make_manin(const QuadraticLieAlgebra& q, std::string name, std::vector<Subspace> subalgebras) {
  QuasiBialgebra qb = manin_quasi_triple(q);
  return CatalogEntry{std::move(name), qb, standard_data(qb), std::move(subalgebras), q};
}

bool parse_family(std::string_view name, std::string_view family, std::string& arg) {
  if (name.size() <= family.size() || name.substr(0, family.size()) != family) return false;
  std::string_view rest = name.substr(family.size());
  if (rest.front() == '(' && rest.back() == ')') {
    arg = std::string(rest.substr(1, rest.size() - 2));
    return true;
  }
  if (rest.front() == '_') {
    std::string s(rest.substr(1));
    if (!s.empty() && s[0] == 'm') s[0] = '-';
    const auto over = s.find("_over_");
    if (over != std::string::npos) s.replace(over, 6, "/");
    arg = s;
    return true;
  }
  return false;
}

}  // namespace

QuadraticLieAlgebra::QuadraticLieAlgebra(LieAlgebra g, Matrix form) : g_(std::move(g)), b_(std::move(form)) {
  const std::size_t n = g_.dim();
  if (b_.rows() != n || b_.cols() != n) throw std::invalid_argument("form size does not match algebra");
  if (!b_.is_symmetric()) throw std::invalid_argument("form is not symmetric");
  if (determinant(b_).is_zero()) throw std::invalid_argument("form is degenerate");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Rational s;
        for (std::size_t m = 0; m < n; ++m) {
          s.add_product(g_.constant(x, y, m), b_(m, z));
          s.add_product(g_.constant(x, z, m), b_(y, m));
        }
        if (!s.is_zero())
          throw std::invalid_argument("form is not invariant at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                      std::to_string(z) + ")");
      }
}

Tensor QuadraticLieAlgebra::casimir() const {
  const Matrix inv = *inverse(b_);
  const std::size_t n = g_.dim();
  Tensor omega(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega.at({i, j}) = inv(i, j);
  return omega;
}

Vec QuadraticLieAlgebra::dual_to_vector(std::span<const Rational> l) const { return inverse(b_)->apply(l); }

Rational QuadraticLieAlgebra::pairing(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(x, b_.apply(y));
}

LieAlgebra sl2() {
  // basis (e, h, f)
  return LieAlgebra::from_entries(3, {{0, 1, 0, -2}, {1, 2, 2, -2}, {0, 2, 1, 1}}, {"e", "h", "f"});
}

LieAlgebra so3() { return LieAlgebra::from_entries(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}}, {"x", "y", "z"}); }

LieAlgebra aff1() { return LieAlgebra::from_entries(2, {{0, 1, 1, 1}}, {"x", "y"}); }

QuadraticLieAlgebra sl2_trace() {
  Matrix b(3, 3);
  b(0, 2) = 1;
  b(2, 0) = 1;
  b(1, 1) = 2;
  return {sl2(), b};
}

QuadraticLieAlgebra so3_standard() { return {so3(), Matrix::identity(3)}; }

QuasiBialgebra manin_quasi_triple(const QuadraticLieAlgebra& q) {
  const LieAlgebra& g = q.algebra();
  const std::size_t n = g.dim();
  Tensor phi = -cyb(g, q.casimir());
  if (!phi.check_antisymmetric()) throw std::logic_error("-CYB(Ω) is not antisymmetric");
  for (std::size_t i = 0; i < n; ++i)
    if (!ad_multi(g, unit_vector(n, i), phi).is_zero()) throw std::logic_error("-CYB(Ω) is not ad-invariant");
  return QuasiBialgebra(g, Cocycle(n), std::move(phi));
}

std::vector<std::string> builtin_names() {
  return {"abelian(3)", "aff1", "sl2_coboundary", "sl2_invariant_phi(1)", "manin_sl2_trace", "manin_so3"};
}

std::string fixture_stem(std::string_view name) {
  std::string out;
  for (char ch : name) {
    if (ch == '(') out += '_';
    else if (ch == ')') continue;
    else if (ch == '/') out += "_over_";
    else if (ch == '-') out += 'm';
    else out += ch;
  }
  return out;
}

constexpr const char* kSl2Convention = "basis (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h";
constexpr const char* kSo3Convention = "basis (x, y, z) with [x,y] = z, [y,z] = x, [z,x] = y";
constexpr const char* kAff1Convention = "basis (x, y) with [x,y] = y";

CatalogEntry builtin(std::string_view name) {
  std::string arg;
  if (parse_family(name, "abelian", arg)) {
    std::size_t n = 0;
    try {
      n = std::stoul(arg);
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown catalog entry: " + std::string(name));
    }
    if (n == 0 || n > 12) throw std::invalid_argument("abelian(n) requires 1 <= n <= 12");
    CatalogEntry e = make_abelian(n, "abelian(" + std::to_string(n) + ")");
    e.convention = "basis e0, ..., e" + std::to_string(n - 1) + " with all brackets zero";
    return e;
  }
  if (parse_family(name, "sl2_invariant_phi", arg)) {
    const Rational c = Rational::parse(arg);
    CatalogEntry e = make_sl2_invariant_phi(c, "sl2_invariant_phi(" + c.str() + ")");
    e.convention = kSl2Convention;
    return e;
  }
  if (name == "aff1") {
    CatalogEntry e = make_aff1();
    e.convention = kAff1Convention;
    return e;
  }
  if (name == "sl2_coboundary" || name == "manin_sl2_trace") {
    CatalogEntry e = name == "sl2_coboundary" ? make_sl2_coboundary()
                                              : make_manin(sl2_trace(), "manin_sl2_trace", sl2_subalgebras());
    e.convention = kSl2Convention;
    return e;
  }
  if (name == "manin_so3") {
    CatalogEntry e = make_manin(so3_standard(), "manin_so3",
                                {Subspace(3), Subspace::span(3, {vec({1, 0, 0})}), Subspace::span(3, {vec({0, 0, 1})}),
                                 Subspace::span(3, {vec({1, 1, 0})}), Subspace::full(3)});
    e.convention = kSo3Convention;
    return e;
  }
  throw std::invalid_argument("unknown catalog entry: " + std::string(name));
}

LieAlgebra product_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Tensor c(2 * n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        c.at({i, j, k}) = g.constant(i, j, k);
        c.at({n + i, n + j, n + k}) = g.constant(i, j, k);
      }
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(l + "_1");
  for (const auto& l : g.labels()) labels.push_back(l + "_2");
  return LieAlgebra(std::move(c), std::move(labels));
}

Matrix product_form(const QuadraticLieAlgebra& q) {
  const std::size_t n = q.algebra().dim();
  Matrix m(2 * n, 2 * n);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = half * q.form()(i, j);
      m(n + i, n + j) = -half * q.form()(i, j);
    }
  return m;
}

ProductModelReport product_double_model(const QuadraticLieAlgebra& q) {
  const LieAlgebra& g = q.algebra();
  const std::size_t n = g.dim();
  const std::size_t N = 2 * n;
  const DoubleAlgebra dbl = build_double(manin_quasi_triple(q));
  ProductModelReport rep{product_algebra(g), product_form(q), Matrix(N, N)};

  const Matrix binv = *inverse(q.form());
  for (std::size_t i = 0; i < n; ++i) {
    rep.psi(i, i) = 1;
    rep.psi(n + i, i) = 1;
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      rep.psi(k, n + j) = binv(k, j);
      rep.psi(n + k, n + j) = -binv(k, j);
    }

  rep.bijective = !determinant(rep.psi).is_zero();

  std::vector<Vec> images;
  for (std::size_t i = 0; i < N; ++i) images.push_back(rep.psi.col_vec(i));
  rep.bracket_check = Verdict::ok();
  for (std::size_t i = 0; i < N && rep.bracket_check.pass; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const Vec lhs = rep.psi.apply(dbl.algebra().bracket_basis(i, j));
      const Vec rhs = rep.product.bracket(images[i], images[j]);
      if (lhs != rhs) {
        rep.bracket_check = Verdict::fail({i, j}, Tensor::from_vector(sub(lhs, rhs)), "ψ does not preserve the bracket");
        break;
      }
    }
  rep.bracket_preserved = rep.bracket_check.pass;

  rep.form_matches = true;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (dot(images[i], rep.product_form.apply(images[j])) != dbl.q(unit_vector(N, i), unit_vector(N, j)))
        rep.form_matches = false;

  rep.g_to_diagonal = true;
  rep.dual_to_antidiagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      rep.g_to_diagonal = rep.g_to_diagonal && images[i][k] == images[i][n + k];
      rep.dual_to_antidiagonal = rep.dual_to_antidiagonal && images[n + i][k] == -images[n + i][n + k];
    }
  }
  return rep;
}

Verdict check_automorphism(const LieAlgebra& g, const Matrix& a) {
  const std::size_t n = g.dim();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("automorphism candidate has the wrong size");
  if (determinant(a).is_zero()) return Verdict::fail({}, Tensor(n, 0), "map is singular");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = a.apply(g.bracket_basis(i, j));
      const Vec rhs = g.bracket(a.col_vec(i), a.col_vec(j));
      if (lhs != rhs) return Verdict::fail({i, j}, Tensor::from_vector(sub(lhs, rhs)), "A[x,y] ≠ [Ax,Ay]");
    }
  return Verdict::ok();
}

bool is_orthogonal(const QuadraticLieAlgebra& q, const Matrix& a) { return a.transpose() * q.form() * a == q.form(); }

Subspace graph_subspace(const QuadraticLieAlgebra& q, const Matrix& a) {
  const std::size_t n = q.algebra().dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(2 * n);
    u[i] = 1;
    const Vec ai = a.col_vec(i);
    for (std::size_t k = 0; k < n; ++k) u[n + k] = ai[k];
    rows.push_back(std::move(u));
  }
  return Subspace::span(2 * n, rows);
}

GraphLagrangian graph_lagrangian(const QuadraticLieAlgebra& q, const Matrix& a) {
  const Verdict aut = check_automorphism(q.algebra(), a);
  if (!aut.pass) {
    std::string w;
    for (auto i : aut.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
    throw std::invalid_argument("A is not an automorphism (witness " + w + "): " + aut.detail);
  }
  if (!is_orthogonal(q, a)) throw std::invalid_argument("A is not B-orthogonal");
  const std::size_t n = q.algebra().dim();
  GraphLagrangian out;
  out.subspace = graph_subspace(q, a);
  const Matrix form = product_form(q);
  bool isotropic = true;
  for (const auto& u : out.subspace.basis())
    for (const auto& v : out.subspace.basis()) isotropic = isotropic && dot(u, form.apply(v)).is_zero();
  out.lagrangian = isotropic && out.subspace.dim() == n;
  out.subalgebra = check_closed(product_algebra(q.algebra()), out.subspace).pass;
  std::vector<Vec> diag;
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(2 * n);
    u[i] = 1;
    u[n + i] = 1;
    diag.push_back(std::move(u));
  }
  std::vector<Vec> fixed;
  const Subspace meet = intersect(out.subspace, Subspace::span(2 * n, diag));
  for (const auto& b : meet.basis())
    fixed.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n));
  out.fixed = Subspace::span(n, fixed);
  return out;
}

}  // namespace qpoisson
