#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qpoisson/rational.hpp"

namespace qpoisson {

using Vec = std::vector<Rational>;

Vec zero_vector(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vec add(std::span<const Rational> a, std::span<const Rational> b);
Vec sub(std::span<const Rational> a, std::span<const Rational> b);
Vec scale(const Rational& c, std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] Vec row_vec(std::size_t i) const;
  [[nodiscard]] Vec col_vec(std::size_t j) const;
  [[nodiscard]] std::vector<Vec> row_list() const;

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vec apply(std::span<const Rational> v) const;
  [[nodiscard]] bool is_symmetric() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form; zero rows dropped. `pivots` receives the pivot columns.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Basis of {x : m x = 0}, in echelon form.
std::vector<Vec> kernel(const Matrix& m);

}  // namespace qpoisson
