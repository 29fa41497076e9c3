#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "baric/scalar.hpp"

namespace baric {

// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  // Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);

// Reduced row echelon form. Pivots are chosen as the first nonzero entry at or
// below the current row, scanning columns left to right.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> kernel(const Matrix& m);
// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Subspace helpers on lists of vectors of a common length.
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim);
// Row-reduced basis of the span.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
// Maximal linearly independent subfamily, keeping the earliest vectors.
std::vector<Vector> independent_subset(const std::vector<Vector>& vectors, std::size_t dim);
bool in_span(const std::vector<Vector>& basis, const Vector& v);
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);
bool is_independent(const std::vector<Vector>& vectors, std::size_t dim);

// Coordinates of vectors with respect to a fixed linearly independent family.
// Precomputes a left inverse so repeated queries are a matrix-vector product.
class Coordinates {
 public:
  Coordinates(std::vector<Vector> basis, std::size_t dim);
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  // nullopt when v is outside the span.
  std::optional<Vector> of(const Vector& v) const;
  // Coordinates assuming membership; the residual check is skipped.
  Vector project(const Vector& v) const;
  Vector combine(const Vector& coords) const;

 private:
  std::vector<Vector> basis_;
  std::size_t dim_;
  Matrix left_inverse_;  // size x dim
};

}  // namespace baric
