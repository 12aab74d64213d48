#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rootlat/error.hpp"
#include "rootlat/numeric.hpp"

namespace rootlat {

// Dense matrices over Int / Rat, row-major. Shapes with zero rows or
// columns are legal values; they show up as maps in and out of rank-0
// lattices.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(check_shape(rows, cols)) {}

  Matrix(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (static_cast<std::size_t>(check_shape(rows, cols)) != e_.size())
      throw DimensionMismatch("entry count does not match matrix shape");
  }

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    e_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_)
        throw DimensionMismatch("ragged initializer for matrix");
      for (const auto& x : row) e_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::vector<T> row(int i) const {
    std::vector<T> r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = (*this)(i, j);
    return r;
  }

  std::vector<T> col(int j) const {
    std::vector<T> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const = default;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  // row[a] -= q * row[b]
  void row_axpy(int a, int b, const T& q) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) -= q * (*this)(b, j);
  }

  // col[a] -= q * col[b]
  void col_axpy(int a, int b, const T& q) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) -= q * (*this)(i, b);
  }

  void negate_row(int a) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }

  void negate_col(int a) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += rootlat::to_string((*this)(i, j));
      }
      s += "\n";
    }
    return s;
  }

 private:
  static int check_shape(int rows, int cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    return rows * cols;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> e_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <typename T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
std::vector<T> mul(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<T> r(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

inline RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline bool is_integral(const RatMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j))) return false;
  return true;
}

inline IntMatrix to_int(const RatMatrix& m) {
  if (!is_integral(m)) throw ConsistencyError("matrix is not integral");
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = num(m(i, j));
  return r;
}

template <typename T>
std::vector<T> add(std::vector<T> a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <typename T>
std::vector<T> sub(std::vector<T> a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product shape mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace rootlat
