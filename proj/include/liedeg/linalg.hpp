#pragma once

// Dense exact linear algebra over a field S (GaussRat or RatFunc).
// S must be constructible from long and provide is_zero(), inverse() and the
// field operators.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liedeg {

template <typename S>
using Vec = std::vector<S>;

template <typename S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  /// Row-major nested initializer.
  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length n).
  static Matrix from_columns(const std::vector<Vec<S>>& cols, size_t n) {
    Matrix m(n, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n) throw std::invalid_argument("column length mismatch");
      for (size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec<S> column(size_t j) const {
    Vec<S> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) {
          const S& b = o(k, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }

  Vec<S> operator*(const Vec<S>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec<S> r(rows_, S(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k)
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) r[i] += (*this)(i, k) * v[k];
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }

  Matrix scaled(const S& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<S> data_;
};

/// Reduced row echelon form with pivot columns.
template <typename S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<size_t> pivots;
  size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; exact over a field.
template <typename S>
Echelon<S> rref(Matrix<S> m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    S inv = m(row, col).inverse();
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      S f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename S>
size_t rank(const Matrix<S>& m) {
  return rref(m).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <typename S>
std::vector<Vec<S>> kernel(const Matrix<S>& m) {
  Echelon<S> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<S>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(m.cols(), S(0));
    v[free] = S(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix, or nullopt when singular.
template <typename S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S(1);
  }
  Echelon<S> e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<S> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <typename S>
S determinant(Matrix<S> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  size_t n = m.rows();
  S det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return S(0);
    if (p != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    S inv = m(col, col).inverse();
    for (size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      S f = m(i, col) * inv;
      for (size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Rank of the span of a list of vectors of length n.
template <typename S>
size_t span_dim(const std::vector<Vec<S>>& vectors, size_t n) {
  if (vectors.empty()) return 0;
  return rank(Matrix<S>::from_columns(vectors, n));
}

/// Echelon basis (as rows) of the span of the given vectors.
template <typename S>
std::vector<Vec<S>> span_basis(const std::vector<Vec<S>>& vectors, size_t n) {
  if (vectors.empty()) return {};
  Matrix<S> m(vectors.size(), n);
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = vectors[i][j];
  Echelon<S> e = rref(std::move(m));
  std::vector<Vec<S>> basis;
  for (size_t r = 0; r < e.rank(); ++r) {
    Vec<S> v(n);
    for (size_t j = 0; j < n; ++j) v[j] = e.reduced(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True when v lies in the span of the basis.
template <typename S>
bool in_span(const std::vector<Vec<S>>& basis, const Vec<S>& v) {
  size_t n = v.size();
  std::vector<Vec<S>> with = basis;
  with.push_back(v);
  return span_dim(with, n) == span_dim(basis, n);
}

}  // namespace liedeg
