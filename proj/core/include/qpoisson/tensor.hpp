#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qpoisson/matrix.hpp"
#include "qpoisson/rational.hpp"

namespace qpoisson {

class Subspace;

using MultiIndex = std::vector<std::size_t>;

/// Dense degree-k tensor over Q^n, components t[i1..ik] stored row-major.
///
/// Multivectors are stored as full antisymmetric tensors, so e0 ∧ e1 has
/// components t[0][1] = 1, t[1][0] = -1. The antisymmetric flag is a
/// certificate: it is only ever set after the property has been checked or
/// when produced by an operation that guarantees it.
class Tensor {
public:
  Tensor() : Tensor(0, 0) {}
  Tensor(std::size_t dim, std::size_t degree);

  static Tensor from_vector(std::span<const Rational> v);
  /// e_{i1} ⊗ ... ⊗ e_{ik}.
  static Tensor basis(std::size_t dim, std::initializer_list<std::size_t> idx);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t size() const { return data_.size(); }

  [[nodiscard]] const Rational& at(std::span<const std::size_t> idx) const { return data_[flat_index(idx)]; }
  Rational& at(std::span<const std::size_t> idx);
  [[nodiscard]] const Rational& at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  Rational& at(std::initializer_list<std::size_t> idx) { return at(std::span<const std::size_t>(idx.begin(), idx.size())); }
  [[nodiscard]] const Rational& flat(std::size_t i) const { return data_[i]; }
  Rational& flat(std::size_t i);
  [[nodiscard]] const std::vector<Rational>& components() const { return data_; }

  [[nodiscard]] std::size_t flat_index(std::span<const std::size_t> idx) const;
  [[nodiscard]] MultiIndex multi_index(std::size_t flat) const;
  /// The components of a degree-1 tensor.
  [[nodiscard]] Vec as_vector() const;

  [[nodiscard]] bool is_zero() const;
  /// Checks t[..i_σ..] = sign(σ) t[..i..] for all transpositions of adjacent slots.
  [[nodiscard]] bool check_antisymmetric() const;
  [[nodiscard]] bool antisymmetric() const { return antisymmetric_; }
  /// Verifies antisymmetry and sets the flag; throws std::invalid_argument otherwise.
  Tensor& mark_antisymmetric();

  /// result[i_{p(0)}, ..., i_{p(k-1)}] = t[i_0, ..., i_{k-1}]: slot s moves to slot p[s].
  [[nodiscard]] Tensor permute_slots(std::span<const std::size_t> p) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
  friend Tensor operator*(const Rational& c, Tensor a) { return a *= c; }
  /// Component equality; the antisymmetric flag is not compared.
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.data_ == b.data_;
  }

private:
  void require_same_shape(const Tensor& o) const;

  std::size_t dim_;
  std::size_t degree_;
  std::vector<Rational> data_;
  bool antisymmetric_ = false;
};

/// Permutations of {0..k-1} in lexicographic order paired with their signs.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  int sign;
};
std::vector<SignedPermutation> signed_permutations(std::size_t k);

Tensor tensor_product(const Tensor& u, const Tensor& v);
/// Alt(t)[i] = Σ_σ sign(σ) t[i_σ(1), ..., i_σ(k)]; no 1/k! factor.
Tensor alt(const Tensor& t);
/// u ∧ v = Alt(u ⊗ v) / (m! n!). Both inputs must carry the antisymmetric flag.
Tensor wedge(const Tensor& u, const Tensor& v);
/// Pairs covectors[j] with slot slots[j]; the remaining slots keep their order.
Tensor contract(std::span<const Vec> covectors, const Tensor& t, std::span<const std::size_t> slots);
/// Full contraction ⟨l1 ⊗ ... ⊗ lk, t⟩.
Rational pair(std::span<const Vec> covectors, const Tensor& t);
/// Pushes every slot through the linear map (target dimension = map.rows()).
Tensor apply_linear(const Tensor& t, const Matrix& map);
/// Image of t under the canonical surjection g -> g/h, slot by slot.
Tensor project_quotient(const Tensor& t, const Subspace& h);
/// Lifts a tensor over g/h back to g via the non-pivot coordinate section.
Tensor lift_quotient(const Tensor& t, const Subspace& h);

/// τ(x ⊗ y ⊗ z) = z ⊗ x ⊗ y on degree-3 tensors.
Tensor cycle3(const Tensor& t);

}  // namespace qpoisson
