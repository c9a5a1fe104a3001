#include "qpoisson/subspace.hpp"

#include <stdexcept>

namespace qpoisson {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  s.basis_ = rref(Matrix::from_rows(vectors, ambient), &s.pivots_).row_list();
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
  return span(ambient, rows);
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> indices) {
  std::vector<Vec> rows;
  for (auto i : indices) rows.push_back(unit_vector(ambient, i));
  return span(ambient, rows);
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Vec Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector does not match subspace ambient dimension");
  Vec out(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = out[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] -= c * basis_[i][j];
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0; the intersection is spanned by sum_i x_i a_i.
  Matrix stacked(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) stacked(k, i) = a.basis()[i][k];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t k = 0; k < n; ++k) stacked(k, a.dim() + j) = -b.basis()[j][k];
  std::vector<Vec> vectors;
  for (const auto& sol : kernel(stacked)) {
    Vec v(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < n; ++k) v[k].add_product(sol[i], a.basis()[i][k]);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace image(const Matrix& map, const Subspace& s) {
  if (map.cols() != s.ambient()) throw std::invalid_argument("linear map does not match subspace ambient dimension");
  std::vector<Vec> rows;
  for (const auto& b : s.basis()) rows.push_back(map.apply(b));
  return Subspace::span(map.rows(), rows);
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient());
  return Subspace::span(s.ambient(), kernel(s.matrix()));
}

Matrix quotient_map(const Subspace& s) {
  const auto free = s.non_pivots();
  const std::size_t n = s.ambient();
  Matrix p(free.size(), n);
  // Column j of the map is the reduced e_j read at the non-pivot coordinates.
  for (std::size_t j = 0; j < n; ++j) {
    const Vec r = s.reduce(unit_vector(n, j));
    for (std::size_t q = 0; q < free.size(); ++q) p(q, j) = r[free[q]];
  }
  return p;
}

Matrix quotient_section(const Subspace& s) {
  const auto free = s.non_pivots();
  Matrix sec(s.ambient(), free.size());
  for (std::size_t q = 0; q < free.size(); ++q) sec(free[q], q) = 1;
  return sec;
}

}  // namespace qpoisson
