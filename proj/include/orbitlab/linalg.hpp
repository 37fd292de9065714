// Exact linear algebra over Q and Q(i).
//
// Forward elimination is fraction-free (Bareiss): every row is first scaled to
// integral entries, after which each elimination step divides exactly by the
// previous pivot, so intermediate entries stay minors of the input.
#pragma once

#include "orbitlab/exact.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace orbitlab {

template <class T>
struct Echelon {
  Matrix<T> m;                        // row echelon form (integral after clearing)
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  int swap_parity = 1;                // +1 / -1 from row swaps
};

namespace detail {

inline mpz_class lcm_den(const Rational& q, const mpz_class& acc) { return lcm(acc, q.get_den()); }
inline mpz_class lcm_den(const Gaussian& z, const mpz_class& acc) {
  return lcm(lcm(acc, z.re.get_den()), z.im.get_den());
}

template <class T>
void clear_row_denominators(Matrix<T>& m, std::size_t i) {
  mpz_class l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) l = lcm_den(m(i, j), l);
  if (l == 1) return;
  const T s = T(Rational(l));
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
}

}  // namespace detail

/// Fraction-free row echelon form.  When `clear` is set the rows are scaled to
/// integral entries first (changes determinants by the scale, not ranks).
template <class T>
Echelon<T> bareiss_echelon(Matrix<T> m, bool clear = true) {
  Echelon<T> out;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (clear)
    for (std::size_t i = 0; i < rows; ++i) detail::clear_row_denominators(m, i);
  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      out.swap_parity = -out.swap_parity;
    }
    const T piv = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T f = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        T v = piv * m(i, j);
        if (!is_zero(f) && !is_zero(m(r, j))) v -= f * m(r, j);
        v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, c) = T(0);
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_echelon(m).pivots.size();
}

/// Reduced row echelon form over the field.
template <class T>
std::pair<Matrix<T>, std::vector<std::size_t>> rref(const Matrix<T>& input) {
  Echelon<T> e = bareiss_echelon(input);
  Matrix<T>& m = e.m;
  const std::size_t cols = m.cols();
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    const std::size_t c = e.pivots[r];
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      const T f = m(i, c);
      if (is_zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
  }
  Matrix<T> out(e.pivots.size(), cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(e.pivots)};
}

/// Null-space basis: one vector per free column, 1 at that column, 0 at the
/// other free columns.
template <class T>
std::vector<Vec<T>> kernel(const Matrix<T>& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) {
    std::vector<Vec<T>> all;
    for (std::size_t j = 0; j < cols; ++j) all.push_back(unit_vector<T>(cols, j));
    return all;
  }
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!is_zero(r(i, f))) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of A x = b, or nullopt when inconsistent.
template <class T>
std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [r, piv] = rref(aug);
  Vec<T> x(a.cols(), T(0));
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == a.cols()) return std::nullopt;
    x[piv[i]] = r(i, a.cols());
  }
  return x;
}

template <class T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  if (m.rows() == 0) return T(1);
  Echelon<T> e = bareiss_echelon(m, false);
  if (e.pivots.size() < m.rows()) return T(0);
  T d = e.m(m.rows() - 1, m.cols() - 1);
  if (e.swap_parity < 0) d = -d;
  return d;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: non-square");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto [r, piv] = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

/// Leading principal minors D_1..D_n, computed without pivoting.  Stops (and
/// returns the prefix) at the first vanishing minor.
std::vector<Rational> leading_principal_minors(const QMatrix& m);

/// Sylvester criterion on a symmetric matrix.  The empty matrix is definite.
bool is_negative_definite(const QMatrix& sym);
bool is_positive_definite(const QMatrix& sym);

/// Monic characteristic polynomial det(xI - A), coefficients c[0..n] with c[n] = 1.
std::vector<Rational> charpoly(const QMatrix& a);

/// Integer roots with multiplicities of a polynomial with rational coefficients
/// (c[0] + c[1] x + ...).  Only integer roots are reported.  `max_abs` caps the
/// candidate scan (e.g. a Gershgorin bound); the Cauchy bound is used otherwise.
std::map<mpz_class, std::size_t> integer_roots(const std::vector<Rational>& coeffs,
                                               const std::optional<mpz_class>& max_abs = std::nullopt);

/// Max absolute row sum (Gershgorin radius bound for eigenvalues).
mpz_class gershgorin_bound(const QMatrix& integral);

/// Rational eigenvalues with algebraic multiplicities.  Every rational
/// eigenvalue of M is k/D with D the common denominator of M, so this scans
/// integer roots of the characteristic polynomial of D*M.
std::map<Rational, std::size_t> rational_eigenvalues(const QMatrix& m);

/// Basis of the span (greedy, keeps the earliest independent vectors).
template <class T>
std::vector<Vec<T>> independent_subset(const std::vector<Vec<T>>& vs) {
  std::vector<Vec<T>> kept;
  for (const auto& v : vs) {
    kept.push_back(v);
    if (rank(Matrix<T>::from_rows(kept)) < kept.size()) kept.pop_back();
  }
  return kept;
}

/// Intersection of two subspaces given by bases.
template <class T>
std::vector<Vec<T>> intersect(const std::vector<Vec<T>>& a, const std::vector<Vec<T>>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.front().size();
  // Solve sum x_i a_i - sum y_j b_j = 0.
  Matrix<T> m(n, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) m(k, i) = a[i][k];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, a.size() + j) = -b[j][k];
  std::vector<Vec<T>> out;
  for (const auto& z : kernel(m)) {
    Vec<T> v(n, T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!is_zero(z[i])) v = add(std::move(v), scale(a[i], z[i]));
    out.push_back(std::move(v));
  }
  return independent_subset(out);
}

/// Coordinates of vectors inside a fixed basis.  Built once from a pivot
/// selection so that repeated coordinate extraction is a matrix product.
template <class T>
class CoordinateMap {
 public:
  CoordinateMap() = default;
  explicit CoordinateMap(std::vector<Vec<T>> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) return;
    ambient_ = basis_.front().size();
    Matrix<T> bt = Matrix<T>::from_rows(basis_);  // k x n
    auto [r, piv] = rref(bt);
    if (piv.size() != basis_.size()) throw std::invalid_argument("CoordinateMap: dependent basis");
    rows_ = piv;
    Matrix<T> square(basis_.size(), basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) square(i, j) = basis_[j][rows_[i]];
    left_inverse_ = inverse(square);
  }

  std::size_t size() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec<T>>& basis() const { return basis_; }

  Vec<T> combine(const Vec<T>& coords) const {
    Vec<T> v(ambient_, T(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!is_zero(coords[i])) v = add(std::move(v), scale(basis_[i], coords[i]));
    return v;
  }

  /// Coordinates, or nullopt if v is not in the span.
  std::optional<Vec<T>> try_coords(const Vec<T>& v) const {
    if (basis_.empty()) {
      if (is_zero_vec(v)) return Vec<T>{};
      return std::nullopt;
    }
    Vec<T> picked(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) picked[i] = v[rows_[i]];
    Vec<T> c = left_inverse_ * picked;
    if (combine(c) != v) return std::nullopt;
    return c;
  }

  Vec<T> coords(const Vec<T>& v) const {
    auto c = try_coords(v);
    if (!c) throw std::domain_error("CoordinateMap: vector outside the span");
    return *c;
  }

  /// Coordinates without the membership check (caller guarantees membership).
  Vec<T> coords_unchecked(const Vec<T>& v) const {
    Vec<T> picked(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) picked[i] = v[rows_[i]];
    return left_inverse_ * picked;
  }

  bool contains(const Vec<T>& v) const { return try_coords(v).has_value(); }

 private:
  std::vector<Vec<T>> basis_;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> rows_;
  Matrix<T> left_inverse_;
};

}  // namespace orbitlab
