#include "baric/linalg.hpp"

#include "baric/errors.hpp"

namespace baric {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!baric::is_zero(x)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) m(i, j) += aik * b(k, j);
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require(a.cols() == x.size(), "matrix-vector dimension mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(x[k]) && !is_zero(a(i, k))) y[i] += a(i, k) * x[k];
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum dimension mismatch");
  Matrix m(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference dimension mismatch");
  Matrix m(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) -= b(i, j);
  return m;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix m(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) *= c;
  return m;
}

Echelon rref(Matrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    Scalar inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Scalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) v[ech.pivot_cols[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  require(b.size() == m.rows(), "solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto ech = rref(std::move(aug));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = ech.reduced(r, m.cols());
  return x;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors.size() ? vectors : std::vector<Vector>{Vector(dim)}));
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  auto ech = rref(Matrix::from_rows(vectors));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) out.push_back(ech.reduced.row(r));
  (void)dim;
  return out;
}

std::vector<Vector> independent_subset(const std::vector<Vector>& vectors, std::size_t dim) {
  std::vector<Vector> kept;
  std::vector<Vector> echelon;  // running reduced rows, pivot = first nonzero
  for (const auto& v : vectors) {
    Vector w = v;
    for (const auto& row : echelon) {
      std::size_t p = 0;
      while (is_zero(row[p])) ++p;
      if (!is_zero(w[p])) {
        Scalar f = w[p] / row[p];
        axpy(w, -f, row);
      }
    }
    if (is_zero(w)) continue;
    kept.push_back(v);
    echelon.push_back(std::move(w));
  }
  (void)dim;
  return kept;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(Matrix::from_columns(basis, v.size()), v).has_value();
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  auto ra = rank_of(a, dim);
  if (ra != rank_of(b, dim)) return false;
  std::vector<Vector> both(a);
  both.insert(both.end(), b.begin(), b.end());
  return rank_of(both, dim) == ra;
}

bool is_independent(const std::vector<Vector>& vectors, std::size_t dim) {
  return rank_of(vectors, dim) == vectors.size();
}

Coordinates::Coordinates(std::vector<Vector> basis, std::size_t dim) : basis_(std::move(basis)), dim_(dim) {
  const std::size_t k = basis_.size();
  left_inverse_ = Matrix(k, dim_);
  if (k == 0) return;
  // Row-reduce [B^T | I_k]: the pivot rows of B give an invertible k x k block.
  Matrix bt = Matrix::from_rows(basis_);  // k x dim
  auto ech = rref(bt);
  require(ech.pivot_cols.size() == k, "coordinate family is linearly dependent");
  Matrix sub(k, k);  // B restricted to pivot rows
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = basis_[j][ech.pivot_cols[i]];
  Matrix aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = sub(i, j);
    aug(i, k + i) = 1;
  }
  auto inv = rref(std::move(aug)).reduced;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) left_inverse_(i, ech.pivot_cols[j]) = inv(i, k + j);
}

Vector Coordinates::project(const Vector& v) const { return left_inverse_ * v; }

std::optional<Vector> Coordinates::of(const Vector& v) const {
  require(v.size() == dim_, "coordinate query length mismatch");
  Vector c = project(v);
  if (combine(c) != v) return std::nullopt;
  return c;
}

Vector Coordinates::combine(const Vector& coords) const {
  Vector v(dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, coords[i], basis_[i]);
  return v;
}

}  // namespace baric
