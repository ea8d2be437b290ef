#pragma once

// Exact dense and sparse linear algebra over Q (and, for dense matrices, any exact field type).

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lievf/rational.hpp"

namespace lievf {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(int j) const {
    std::vector<T> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }
  void set_col(int j, const std::vector<T>& c) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[static_cast<std::size_t>(i)];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& c, Matrix a) {
    for (auto& v : a.data_) v *= c;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<T> r(static_cast<std::size_t>(rows_), T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) r[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return r;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

/// Reduced row echelon form; `pivots[i]` is the pivot column of row i.
template <class T>
struct Rref {
  Matrix<T> reduced;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class T>
Rref<T> rref(Matrix<T> m) {
  Rref<T> out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
int rank(const Matrix<T>& m) {
  return rref(m).rank();
}

/// Basis of {v : m v = 0}, one vector per free column (that column set to 1).
template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
  Rref<T> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<T> v(static_cast<std::size_t>(m.cols()), T(0));
    v[static_cast<std::size_t>(f)] = T(1);
    for (int i = 0; i < e.rank(); ++i) v[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(i)])] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m x = b, if one exists.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<std::size_t>(i)];
  }
  Rref<T> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(static_cast<std::size_t>(m.cols()), T(0));
  for (int i = 0; i < e.rank(); ++i) x[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(i)])] = e.reduced(i, m.cols());
  return x;
}

template <class T>
T determinant(Matrix<T> m) {
  assert(m.rows() == m.cols());
  T det(1);
  const int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return T(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      T f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class T>
T trace(const Matrix<T>& m) {
  T t(0);
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::string to_string(const QMatrix& m);

/// Sparse row: strictly increasing column indices with nonzero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Incremental sparse elimination over Q. Rows are reduced against stored pivots as they arrive.
class SparseEchelon {
 public:
  explicit SparseEchelon(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces `row` against the stored pivots; stores it if a nonzero remainder survives.
  /// Returns true when the rank grew.
  bool insert(SparseRow row);
  /// True when `row` lies in the span of inserted rows.
  bool contains(SparseRow row) const;

  /// Basis of the right kernel {v : r.v = 0 for all stored rows}, one vector per non-pivot column.
  std::vector<std::vector<Rational>> kernel() const;

 private:
  SparseRow reduce(SparseRow row) const;

  int cols_;
  std::map<int, SparseRow> rows_;  // keyed by leading column; leading value 1
};

SparseRow sparse_axpy(const SparseRow& a, const Rational& c, const SparseRow& b);

}  // namespace lievf
