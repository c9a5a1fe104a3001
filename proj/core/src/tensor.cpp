#include "qpoisson/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qpoisson/subspace.hpp"

namespace qpoisson {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Advances a multi-index in row-major order; returns false after the last one.
bool next_index(MultiIndex& idx, std::size_t dim) {
  for (std::size_t s = idx.size(); s-- > 0;) {
    if (++idx[s] < dim) return true;
    idx[s] = 0;
  }
  return false;
}

}  // namespace

Tensor::Tensor(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), data_(power(dim, degree)) {}

Tensor Tensor::from_vector(std::span<const Rational> v) {
  Tensor t(v.size(), 1);
  std::copy(v.begin(), v.end(), t.data_.begin());
  t.antisymmetric_ = true;
  return t;
}

Tensor Tensor::basis(std::size_t dim, std::initializer_list<std::size_t> idx) {
  Tensor t(dim, idx.size());
  t.at(idx) = 1;
  t.antisymmetric_ = idx.size() <= 1;
  return t;
}

Rational& Tensor::at(std::span<const std::size_t> idx) {
  antisymmetric_ = false;
  return data_[flat_index(idx)];
}

Rational& Tensor::flat(std::size_t i) {
  antisymmetric_ = false;
  return data_.at(i);
}

std::size_t Tensor::flat_index(std::span<const std::size_t> idx) const {
  if (idx.size() != degree_) throw std::invalid_argument("index arity does not match tensor degree");
  std::size_t f = 0;
  for (auto i : idx) {
    if (i >= dim_) throw std::out_of_range("tensor index out of range");
    f = f * dim_ + i;
  }
  return f;
}

MultiIndex Tensor::multi_index(std::size_t flat) const {
  MultiIndex idx(degree_);
  for (std::size_t s = degree_; s-- > 0;) {
    idx[s] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

Vec Tensor::as_vector() const {
  if (degree_ != 1) throw std::invalid_argument("as_vector requires a degree-1 tensor");
  return data_;
}

bool Tensor::is_zero() const { return qpoisson::is_zero(data_); }

bool Tensor::check_antisymmetric() const {
  if (degree_ < 2) return true;
  MultiIndex idx(degree_, 0);
  if (dim_ == 0) return true;
  do {
    for (std::size_t s = 0; s + 1 < degree_; ++s) {
      MultiIndex swapped = idx;
      std::swap(swapped[s], swapped[s + 1]);
      if (at(swapped) != -at(idx)) return false;
    }
  } while (next_index(idx, dim_));
  return true;
}

Tensor& Tensor::mark_antisymmetric() {
  if (!check_antisymmetric()) throw std::invalid_argument("tensor is not antisymmetric");
  antisymmetric_ = true;
  return *this;
}

Tensor Tensor::permute_slots(std::span<const std::size_t> p) const {
  if (p.size() != degree_) throw std::invalid_argument("permutation arity does not match tensor degree");
  Tensor out(dim_, degree_);
  if (dim_ == 0) return out;
  MultiIndex idx(degree_, 0), target(degree_);
  std::size_t f = 0;
  do {
    for (std::size_t s = 0; s < degree_; ++s) target[p[s]] = idx[s];
    out.data_[out.flat_index(target)] = data_[f++];
  } while (next_index(idx, dim_));
  out.antisymmetric_ = antisymmetric_;
  return out;
}

void Tensor::require_same_shape(const Tensor& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw std::invalid_argument("tensor shape mismatch");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  antisymmetric_ = antisymmetric_ && o.antisymmetric_;
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  antisymmetric_ = antisymmetric_ && o.antisymmetric_;
  return *this;
}

Tensor& Tensor::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

std::vector<SignedPermutation> signed_permutations(std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (p[i] > p[j]) ++inversions;
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Tensor tensor_product(const Tensor& u, const Tensor& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("tensor product dimension mismatch");
  Tensor out(u.dim(), u.degree() + v.degree());
  const std::size_t vs = v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.flat(i).is_zero()) continue;
    for (std::size_t j = 0; j < vs; ++j) out.flat(i * vs + j) = u.flat(i) * v.flat(j);
  }
  return out;
}

Tensor alt(const Tensor& t) {
  const std::size_t k = t.degree();
  Tensor out(t.dim(), k);
  if (t.dim() == 0 || k == 0) {
    out = t;
    return out.mark_antisymmetric();
  }
  const auto perms = signed_permutations(k);
  // Scatter: every nonzero component t[i] contributes sign(σ) to out[i∘σ].
  MultiIndex target(k);
  for (std::size_t f = 0; f < t.size(); ++f) {
    const Rational& c = t.flat(f);
    if (c.is_zero()) continue;
    const MultiIndex idx = t.multi_index(f);
    for (const auto& [perm, sign] : perms) {
      for (std::size_t s = 0; s < k; ++s) target[s] = idx[perm[s]];
      Rational& slot = out.at(target);
      if (sign > 0) slot += c;
      else slot -= c;
    }
  }
  return out.mark_antisymmetric();
}

Tensor wedge(const Tensor& u, const Tensor& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("wedge dimension mismatch");
  if (!u.antisymmetric() || !v.antisymmetric()) throw std::invalid_argument("wedge requires antisymmetric inputs");
  Tensor w = alt(tensor_product(u, v));
  w *= Rational(1) / (factorial(static_cast<unsigned>(u.degree())) * factorial(static_cast<unsigned>(v.degree())));
  return w;
}

Tensor contract(std::span<const Vec> covectors, const Tensor& t, std::span<const std::size_t> slots) {
  if (covectors.size() != slots.size()) throw std::invalid_argument("contract: covector and slot counts differ");
  if (slots.size() > t.degree()) throw std::invalid_argument("contract: more slots than tensor degree");
  std::vector<bool> used(t.degree(), false);
  for (auto s : slots) {
    if (s >= t.degree()) throw std::out_of_range("contract: slot out of range");
    if (used[s]) throw std::invalid_argument("contract: repeated slot");
    used[s] = true;
  }
  for (const auto& c : covectors)
    if (c.size() != t.dim()) throw std::invalid_argument("contract: covector dimension mismatch");
  std::vector<std::size_t> free_slots;
  for (std::size_t s = 0; s < t.degree(); ++s)
    if (!used[s]) free_slots.push_back(s);

  Tensor out(t.dim(), free_slots.size());
  MultiIndex rest(free_slots.size());
  for (std::size_t f = 0; f < t.size(); ++f) {
    const Rational& c = t.flat(f);
    if (c.is_zero()) continue;
    const MultiIndex idx = t.multi_index(f);
    Rational w = c;
    for (std::size_t j = 0; j < slots.size() && !w.is_zero(); ++j) w *= covectors[j][idx[slots[j]]];
    if (w.is_zero()) continue;
    for (std::size_t r = 0; r < free_slots.size(); ++r) rest[r] = idx[free_slots[r]];
    out.at(rest) += w;
  }
  return out;
}

Rational pair(std::span<const Vec> covectors, const Tensor& t) {
  std::vector<std::size_t> slots(t.degree());
  std::iota(slots.begin(), slots.end(), 0);
  return contract(covectors, t, slots).flat(0);
}

Tensor apply_linear(const Tensor& t, const Matrix& map) {
  if (map.cols() != t.dim()) throw std::invalid_argument("apply_linear: map does not match tensor dimension");
  // One slot at a time: cost k · m · n^k instead of m^k · n^k.
  const std::size_t k = t.degree();
  const std::size_t m = map.rows();
  std::vector<Rational> cur = t.components();
  std::size_t cur_dim_before = 1;  // product of already-mapped slot sizes (m each)
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t after = power(t.dim(), k - s - 1);
    std::vector<Rational> next(cur_dim_before * m * after);
    for (std::size_t a = 0; a < cur_dim_before; ++a)
      for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t b = 0; b < after; ++b) {
          const Rational& c = cur[(a * t.dim() + i) * after + b];
          if (c.is_zero()) continue;
          for (std::size_t q = 0; q < m; ++q) next[(a * m + q) * after + b].add_product(map(q, i), c);
        }
    cur = std::move(next);
    cur_dim_before *= m;
  }
  Tensor out(m, k);
  for (std::size_t f = 0; f < out.size(); ++f) out.flat(f) = cur[f];
  if (t.antisymmetric()) out.mark_antisymmetric();
  return out;
}

Tensor project_quotient(const Tensor& t, const Subspace& h) {
  if (h.ambient() != t.dim()) throw std::invalid_argument("project_quotient: subspace does not live in the tensor's space");
  return apply_linear(t, quotient_map(h));
}

Tensor lift_quotient(const Tensor& t, const Subspace& h) {
  return apply_linear(t, quotient_section(h));
}

Tensor cycle3(const Tensor& t) {
  if (t.degree() != 3) throw std::invalid_argument("cycle3 requires a degree-3 tensor");
  // x⊗y⊗z -> z⊗x⊗y: slot 0 -> 1, slot 1 -> 2, slot 2 -> 0.
  const std::size_t p[3] = {1, 2, 0};
  return t.permute_slots(p);
}

}  // namespace qpoisson
