#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/errors.hpp"
#include "clusterlab/rational.hpp"

namespace clusterlab {

/// Dense row-major matrix over any commutative ring T.
/// T must provide +, -, * and construction from int.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t k) {
    Matrix a(k, k);
    for (std::size_t i = 0; i < k; ++i) a(i, i) = T(1);
    return a;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T& at(std::size_t r, std::size_t c) {
    check(r, c);
    return (*this)(r, c);
  }
  const T& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return (*this)(r, c);
  }

  std::vector<T> column(std::size_t c) const {
    if (c >= cols_) throw DimensionError("column index out of range");
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const std::vector<T>& v) {
    if (c >= cols_ || v.size() != rows_) throw DimensionError("set_column shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Columns listed in `idx`, in that order.
  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= cols_) throw DimensionError("column index out of range");
      for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, idx[k]);
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

namespace detail {

template <class T>
T laplace(const Matrix<T>& a, std::vector<std::size_t>& cols, std::size_t row) {
  std::size_t k = cols.size();
  if (k == 0) return T(1);
  if (k == 1) return a(row, cols[0]);
  if (k == 2) return a(row, cols[0]) * a(row + 1, cols[1]) - a(row, cols[1]) * a(row + 1, cols[0]);
  T acc(0);
  for (std::size_t j = 0; j < k; ++j) {
    if (a(row, cols[j]) == T(0)) continue;
    std::size_t c = cols[j];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    T minor = laplace(a, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), c);
    if (j % 2 == 0)
      acc += a(row, c) * minor;
    else
      acc -= a(row, c) * minor;
  }
  return acc;
}

}  // namespace detail

/// Determinant by cofactor expansion along rows; works over any ring.
template <class T>
T det_cofactor(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(a.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::laplace(a, cols, 0);
}

/// Exact determinant. Cofactor expansion up to 4x4, fraction-free Bareiss above.
Rational det(const RationalMatrix& a);

/// Reduced row echelon rank.
std::size_t rank(const RationalMatrix& a);

/// Solve a x = b for square nonsingular a. Throws ArithmeticError when singular.
Vector solve(const RationalMatrix& a, const Vector& b);

struct Covector {
  Vector coeffs;
  bool degenerate = false;
};

/// Covector xi with xi(w) = det(w, v_1, ..., v_{m-1}) for m-1 vectors in Q^m,
/// expanded along the first column. Dependent input gives the zero covector
/// with the degenerate flag set.
Covector xi_covector(const std::vector<Vector>& vs);

/// Matrix whose columns are the given vectors.
RationalMatrix from_columns(const std::vector<Vector>& cols);

Rational dot(const Vector& a, const Vector& b);

std::string to_string(const RationalMatrix& a);

}  // namespace clusterlab
