#include "orbitlab/convex_hull.hpp"

#include <stdexcept>

namespace orbitlab {

std::optional<QVec> feasible_point(const QMatrix& a, const QVec& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("feasible_point: shape mismatch");

  // Tableau columns: n structural, m artificial, then rhs.
  const std::size_t width = n + m + 1;
  QMatrix t(m, width);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Phase-1 objective: minimise the artificial sum.  Reduced costs of the
  // structural columns are minus the column sums.
  QVec cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t(i, j);

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rational ratio = t(i, width - 1) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 simplex unbounded (cannot happen)");

    const Rational piv = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  // Optimal value is -cost[rhs].
  if (sgn(cost[width - 1]) != 0) return std::nullopt;
  QVec x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, width - 1);
  return x;
}

std::optional<QVec> convex_weights(const QVec& y, const std::vector<QVec>& generators) {
  if (generators.empty()) return std::nullopt;
  const std::size_t dim = y.size();
  for (const auto& g : generators)
    if (g.size() != dim) throw std::invalid_argument("in_convex_hull: dimension mismatch");
  QMatrix a(dim + 1, generators.size());
  QVec b(dim + 1);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) a(i, j) = generators[j][i];
    a(dim, j) = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) b[i] = y[i];
  b[dim] = 1;
  return feasible_point(a, b);
}

bool in_convex_hull(const QVec& y, const std::vector<QVec>& generators) {
  return convex_weights(y, generators).has_value();
}

}  // namespace orbitlab
