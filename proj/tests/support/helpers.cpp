#include "helpers.hpp"

#include "qpoisson/lie_algebra.hpp"
#include "qpoisson/matrix.hpp"
#include "qpoisson/quasi_bialgebra.hpp"

namespace testing_support {

qpoisson::Tensor trivector(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return qpoisson::alt(qpoisson::Tensor::basis(n, {i, j, k}));
}

// The residual map r ↦ (image of δ(a) + ad_a r in ∧²(g/h))_a is affine in the
// coordinates r_ij (i < j); solve it by row reduction.
StableSlice stable_slice(const qpoisson::QuasiBialgebra& qb, const qpoisson::Subspace& h) {
  using namespace qpoisson;
  const std::size_t n = qb.dim();
  std::vector<Tensor> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) units.push_back(bivector(n, i, j));
  std::vector<Vec> lin_cols(units.size());
  Vec constant;
  for (const auto& a : h.basis()) {
    const Vec c = project_quotient(qb.delta(a), h).components();
    constant.insert(constant.end(), c.begin(), c.end());
    for (std::size_t u = 0; u < units.size(); ++u) {
      const Vec l = project_quotient(ad_multi(qb.algebra, a, units[u]), h).components();
      lin_cols[u].insert(lin_cols[u].end(), l.begin(), l.end());
    }
  }
  const std::size_t rows = constant.size(), m = units.size();
  Matrix aug(rows, m + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t u = 0; u < m; ++u) aug(r, u) = lin_cols[u][r];
    aug(r, m) = -constant[r];
  }
  std::vector<std::size_t> piv;
  const Matrix red = rref(aug, &piv);
  StableSlice out;
  if (!piv.empty() && piv.back() == m) return out;
  out.empty = false;
  out.particular = Tensor(n, 2);
  for (std::size_t r = 0; r < piv.size(); ++r) out.particular += red(r, m) * units[piv[r]];
  out.particular.mark_antisymmetric();
  Matrix lin(rows, m);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t u = 0; u < m; ++u) lin(r, u) = aug(r, u);
  for (const auto& k : kernel(lin)) {
    Tensor dir(n, 2);
    for (std::size_t u = 0; u < m; ++u) dir += k[u] * units[u];
    out.directions.push_back(dir.mark_antisymmetric());
  }
  return out;
}

qpoisson::Tensor sample_slice(const StableSlice& slice, qpoisson::Sampler& s) {
  qpoisson::Tensor r = slice.particular;
  for (const auto& d : slice.directions) r += s.rational() * d;
  return r.mark_antisymmetric();
}

std::vector<qpoisson::CatalogEntry> catalog_entries() {
  std::vector<qpoisson::CatalogEntry> out;
  for (const auto& name : qpoisson::builtin_names()) out.push_back(qpoisson::builtin(name));
  return out;
}

}  // namespace testing_support
