#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

using orbitlab::Family;
using orbitlab::RealFormSpec;

namespace {

QMat zeros(std::size_t n) { return QMat(n, std::vector<Q>(n, Q(0))); }

QMat mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QMat lin(const QMat& a, const Q& x, const QMat& b, const Q& y) {
  QMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = x * a[i][j] + y * b[i][j];
  return c;
}

Q trace(const QMat& a) {
  Q t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// (a + ib)(c + id) = (ac - bd) + i(ad + bc)
ZMat zmul(const ZMat& x, const ZMat& y) {
  return {lin(mul(x.re, y.re), 1, mul(x.im, y.im), -1), lin(mul(x.re, y.im), 1, mul(x.im, y.re), 1)};
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::size_t weyl_order_so(std::size_t m) {
  if (m <= 2) return 1;
  const std::size_t l = m / 2;
  return m % 2 ? (std::size_t{1} << l) * factorial(l) : (std::size_t{1} << (l - 1)) * factorial(l);
}

std::pair<std::size_t, std::size_t> pq_sorted(const RealFormSpec& spec) {
  const auto p = static_cast<std::size_t>(spec.params.at(0));
  const auto q = static_cast<std::size_t>(spec.params.at(1));
  return {std::max(p, q), std::min(p, q)};
}

std::size_t sign_changes(const std::vector<Q>& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

ZMat from_library(const orbitlab::CMatrix& m) {
  ZMat z{zeros(m.rows()), zeros(m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      z.re[i][j] = m(i, j).re;
      z.im[i][j] = m(i, j).im;
    }
  return z;
}

ZMat commutator(const ZMat& a, const ZMat& b) {
  const ZMat ab = zmul(a, b), ba = zmul(b, a);
  return {lin(ab.re, 1, ba.re, -1), lin(ab.im, 1, ba.im, -1)};
}

ZMat add_scaled(ZMat acc, const ZMat& m, const Q& c) {
  acc.re = lin(acc.re, 1, m.re, c);
  acc.im = lin(acc.im, 1, m.im, c);
  return acc;
}

bool equal(const ZMat& a, const ZMat& b) { return a.re == b.re && a.im == b.im; }

Q real_trace_product(const ZMat& a, const ZMat& b) { return trace(zmul(a, b).re); }

std::string commutator_table_mismatch(const orbitlab::RealForm& rf) {
  std::vector<ZMat> m;
  for (const auto& x : rf.basis_matrices()) m.push_back(from_library(x));
  const auto& g = rf.algebra();
  const std::size_t d = m.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ZMat expected{zeros(rf.matrix_size()), zeros(rf.matrix_size())};
      for (std::size_t k = 0; k < d; ++k)
        if (g.constant(i, j, k) != 0) expected = add_scaled(expected, m[k], g.constant(i, j, k));
      if (!equal(commutator(m[i], m[j]), expected)) return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
  return "";
}

Q killing_trace_factor(const RealFormSpec& spec) {
  const long n = static_cast<long>(spec.matrix_size());
  switch (spec.family) {
    case Family::su_pq: return 2 * n;
    case Family::sp_2n_R: return n + 2;
    case Family::so_p_q:
    case Family::so_2n_star: return n - 2;
  }
  throw std::logic_error("unknown family");
}

std::size_t real_rank(const RealFormSpec& spec) {
  switch (spec.family) {
    case Family::su_pq:
    case Family::so_p_q: return pq_sorted(spec).second;
    case Family::sp_2n_R: return static_cast<std::size_t>(spec.params.at(0));
    case Family::so_2n_star: return static_cast<std::size_t>(spec.params.at(0)) / 2;
  }
  throw std::logic_error("unknown family");
}

std::size_t dim_g(const RealFormSpec& spec) {
  const std::size_t n = spec.matrix_size();
  switch (spec.family) {
    case Family::su_pq: return n * n - 1;
    case Family::sp_2n_R: return n * (n + 1) / 2;
    case Family::so_p_q:
    case Family::so_2n_star: return n * (n - 1) / 2;
  }
  throw std::logic_error("unknown family");
}

std::size_t dim_k(const RealFormSpec& spec) {
  switch (spec.family) {
    case Family::su_pq: {
      const auto [p, q] = pq_sorted(spec);
      return p * p + q * q - 1;
    }
    case Family::so_p_q: {
      const auto [p, q] = pq_sorted(spec);
      return p * (p - 1) / 2 + q * (q - 1) / 2;
    }
    case Family::sp_2n_R:
    case Family::so_2n_star: {
      const auto n = static_cast<std::size_t>(spec.params.at(0));
      return n * n;
    }
  }
  throw std::logic_error("unknown family");
}

std::vector<std::size_t> positive_root_multiplicities(const RealFormSpec& spec) {
  std::vector<std::size_t> out;
  // Restricted root systems of type C_r, BC_r, B_r or D_r with the given
  // multiplicities of e_i +- e_j, e_i and 2 e_i.
  auto fill = [&](std::size_t r, std::size_t m_pm, std::size_t m_short, std::size_t m_long) {
    for (std::size_t k = 0; k < r * (r - 1); ++k) out.push_back(m_pm);
    for (std::size_t k = 0; k < r; ++k) {
      if (m_short) out.push_back(m_short);
      if (m_long) out.push_back(m_long);
    }
  };
  switch (spec.family) {
    case Family::su_pq: {
      const auto [p, q] = pq_sorted(spec);
      fill(q, 2, 2 * (p - q), 1);
      break;
    }
    case Family::sp_2n_R: fill(real_rank(spec), 1, 0, 1); break;
    case Family::so_p_q: {
      const auto [p, q] = pq_sorted(spec);
      fill(q, 1, p - q, 0);
      break;
    }
    case Family::so_2n_star: {
      const auto n = static_cast<std::size_t>(spec.params.at(0));
      fill(n / 2, 4, n % 2 ? 4 : 0, 1);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t cascade_length(const RealFormSpec& spec) { return real_rank(spec); }

std::size_t compact_weyl_order(const RealFormSpec& spec) {
  switch (spec.family) {
    case Family::su_pq: return factorial(static_cast<std::size_t>(spec.params.at(0))) * factorial(static_cast<std::size_t>(spec.params.at(1)));
    case Family::sp_2n_R:
    case Family::so_2n_star: return factorial(static_cast<std::size_t>(spec.params.at(0)));
    case Family::so_p_q:
      return weyl_order_so(static_cast<std::size_t>(spec.params.at(0))) * weyl_order_so(static_cast<std::size_t>(spec.params.at(1)));
  }
  throw std::logic_error("unknown family");
}

std::size_t gelfand_tsetlin_count(const std::vector<long>& top) {
  if (top.size() <= 1) return 1;
  // Rows below `row` interlace: row[i] >= next[i] >= row[i + 1].
  std::size_t count = 0;
  std::vector<long> next(top.size() - 1);
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == next.size()) {
      count += gelfand_tsetlin_count(next);
      return;
    }
    for (long v = top[i + 1]; v <= top[i]; ++v) {
      next[i] = v;
      choose(i + 1);
    }
  };
  choose(0);
  return count;
}

std::vector<Q> characteristic_polynomial(const QMat& a) {
  const std::size_t n = a.size();
  std::vector<Q> c(n + 1, Q(0));  // c[k] multiplies x^(n-k)
  c[0] = 1;
  QMat m = zeros(n);
  QMat id = zeros(n);
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    m = lin(mul(a, m), 1, id, c[k - 1]);
    c[k] = -trace(mul(a, m)) / Q(static_cast<long>(k));
  }
  return c;
}

std::pair<std::size_t, std::size_t> inertia(const QMat& sym) {
  const std::vector<Q> c = characteristic_polynomial(sym);
  std::vector<Q> reflected = c;
  // p(-x): flip the sign of odd powers.
  const std::size_t n = c.size() - 1;
  for (std::size_t k = 0; k <= n; ++k)
    if ((n - k) % 2) reflected[k] = -reflected[k];
  return {sign_changes(c), sign_changes(reflected)};
}

}  // namespace oracle
