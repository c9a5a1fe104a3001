#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qpoisson/catalog.hpp"
#include "qpoisson/rational.hpp"
#include "qpoisson/sampling.hpp"
#include "qpoisson/subspace.hpp"
#include "qpoisson/tensor.hpp"

namespace testing_support {

inline qpoisson::Vec vec(std::initializer_list<qpoisson::Rational> xs) { return qpoisson::Vec(xs); }

/// c (e_i ⊗ e_j - e_j ⊗ e_i).
inline qpoisson::Tensor bivector(std::size_t n, std::size_t i, std::size_t j, const qpoisson::Rational& c = 1) {
  qpoisson::Tensor r(n, 2);
  r.at({i, j}) = c;
  r.at({j, i}) = -c;
  return r.mark_antisymmetric();
}

/// Alt(e_i ⊗ e_j ⊗ e_k), i.e. e_i ∧ e_j ∧ e_k.
qpoisson::Tensor trivector(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// The affine set of bivectors r whose stability residuals vanish for h:
/// r = particular + Σ c_i directions[i]. `empty` when no r is stable.
struct StableSlice {
  bool empty = true;
  qpoisson::Tensor particular;
  std::vector<qpoisson::Tensor> directions;
};
StableSlice stable_slice(const qpoisson::QuasiBialgebra& qb, const qpoisson::Subspace& h);

/// A point of the slice with coefficients drawn from the sampler.
qpoisson::Tensor sample_slice(const StableSlice& slice, qpoisson::Sampler& s);

/// The shipped catalog entries.
std::vector<qpoisson::CatalogEntry> catalog_entries();

}  // namespace testing_support
