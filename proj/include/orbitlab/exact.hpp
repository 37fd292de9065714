// Exact scalars (rationals, Gaussian rationals) and small dense containers.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitlab {

/// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;

Rational make_rational(const std::string& num, const std::string& den = "1");
/// Parses "3", "-2/5" or "0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

/// Element of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: Q embeds in Q(i)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(int r) : re(r) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);
};

Gaussian operator+(Gaussian a, const Gaussian& b);
Gaussian operator-(Gaussian a, const Gaussian& b);
Gaussian operator-(const Gaussian& a);
Gaussian operator*(Gaussian a, const Gaussian& b);
Gaussian operator/(Gaussian a, const Gaussian& b);
bool operator==(const Gaussian& a, const Gaussian& b);
inline bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
std::string to_string(const Gaussian& z);

inline const Gaussian kI{Rational(0), Rational(1)};

// Field-generic helpers so elimination code can be written once.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }

template <class T>
using Vec = std::vector<T>;

using QVec = Vec<Rational>;
using CVec = Vec<Gaussian>;

/// Row-major dense matrix over an exact field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<T>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("Matrix::from_columns: bad column size");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const { return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<T> col(std::size_t j) const {
    Vec<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!orbitlab::is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (orbitlab::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix-vector product: shape mismatch");
    Vec<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (orbitlab::is_zero(v[j])) continue;
        out[i] += a(i, j) * v[j];
      }
    return out;
  }

  /// Row vector times matrix: returns v^T A.
  friend Vec<T> left_multiply(const Vec<T>& v, const Matrix& a) {
    if (a.rows_ != v.size()) throw std::invalid_argument("left_multiply: shape mismatch");
    Vec<T> out(a.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (orbitlab::is_zero(v[i])) continue;
      for (std::size_t j = 0; j < a.cols_; ++j) out[j] += v[i] * a(i, j);
    }
    return out;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<Gaussian>;

// Vector helpers.
template <class T>
Vec<T> add(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class T>
Vec<T> sub(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class T>
Vec<T> scale(Vec<T> a, const T& s) {
  for (auto& x : a) x *= s;
  return a;
}
template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}
template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}
template <class T>
Vec<T> unit_vector(std::size_t n, std::size_t k) {
  Vec<T> v(n, T(0));
  v.at(k) = T(1);
  return v;
}

CVec to_complex(const QVec& v);
CMatrix to_complex(const QMatrix& m);
CMatrix conjugate(const CMatrix& m);
/// Conjugate transpose.
CMatrix adjoint(const CMatrix& m);

}  // namespace orbitlab
