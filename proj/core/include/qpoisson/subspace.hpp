#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpoisson/matrix.hpp"

namespace qpoisson {

/// A linear subspace of Q^N stored by its reduced row-echelon basis.
///
/// The echelon matrix is canonical, so two subspaces are equal exactly when
/// their stored matrices are identical.
class Subspace {
public:
  /// The zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);
  /// Span of the coordinate vectors e_i, i in `indices`.
  static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> indices);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates not used as pivots, in increasing order.
  [[nodiscard]] std::vector<std::size_t> non_pivots() const;
  [[nodiscard]] Matrix matrix() const { return Matrix::from_rows(basis_, ambient_); }

  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// v minus its components along the pivot rows; zero iff v is a member.
  [[nodiscard]] Vec reduce(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of a subspace under a linear map (rows of `map` = target coordinates).
Subspace image(const Matrix& map, const Subspace& s);
/// {l in (Q^N)^* : l(v) = 0 for all v in s}, as row vectors of the dual basis.
Subspace annihilator(const Subspace& s);

/// The canonical surjection Q^N -> Q^N / s as a (N - dim s) x N matrix.
///
/// The quotient is based on the non-pivot coordinates of s: a vector is first
/// reduced modulo s (clearing pivot columns) and then its non-pivot
/// coordinates are read off.
Matrix quotient_map(const Subspace& s);
/// The section Q^N / s -> Q^N sending quotient basis vector j to e_{non_pivot[j]}.
Matrix quotient_section(const Subspace& s);

}  // namespace qpoisson
