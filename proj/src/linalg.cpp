#include "orbitlab/linalg.hpp"

namespace orbitlab {

std::vector<Rational> leading_principal_minors(const QMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("leading_principal_minors: non-square");
  // Bareiss without pivoting: after step k the (k,k) entry is the (k+1)-th
  // leading principal minor.
  QMatrix m = input;
  std::vector<Rational> minors;
  Rational prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      minors.emplace_back(0);
      return minors;
    }
    minors.push_back(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return minors;
}

bool is_negative_definite(const QMatrix& sym) {
  auto minors = leading_principal_minors(sym);
  if (minors.size() < sym.rows()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

bool is_positive_definite(const QMatrix& sym) {
  auto minors = leading_principal_minors(sym);
  if (minors.size() < sym.rows()) return false;
  for (const auto& d : minors)
    if (sgn(d) <= 0) return false;
  return true;
}

std::vector<Rational> charpoly(const QMatrix& a) {
  // Faddeev-LeVerrier: M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I,
  // c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("charpoly: non-square");
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    QMatrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

std::map<mpz_class, std::size_t> integer_roots(const std::vector<Rational>& coeffs, const std::optional<mpz_class>& max_abs) {
  std::map<mpz_class, std::size_t> roots;
  std::vector<mpz_class> p;
  {
    mpz_class l = 1;
    for (const auto& c : coeffs) l = lcm(l, c.get_den());
    for (const auto& c : coeffs) {
      Rational s = c * Rational(l);
      p.push_back(s.get_num());
    }
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw std::invalid_argument("integer_roots: zero polynomial");
  std::size_t zero_mult = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult) roots[mpz_class(0)] = zero_mult;

  auto eval = [](const std::vector<mpz_class>& poly, const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
  };
  auto deflate = [](const std::vector<mpz_class>& poly, const mpz_class& x) {
    // Synthetic division by (t - x); exact because x is a root.
    std::vector<mpz_class> q(poly.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = poly.size(); i-- > 1;) {
      carry = carry * x + poly[i];
      q[i - 1] = carry;
    }
    return q;
  };

  // Integer roots divide the constant term (a rational root p/q needs q | lead;
  // we only report the integral ones).
  const mpz_class c0 = abs(p.front());
  std::vector<mpz_class> candidates;
  // Cauchy bound keeps the divisor scan finite for large constant terms.
  mpz_class bound = 0;
  {
    const mpz_class lead = abs(p.back());
    mpz_class mx = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) mx = std::max(mx, mpz_class(abs(p[i])));
    bound = 1 + mx / lead;
  }
  if (max_abs && *max_abs < bound) bound = *max_abs;
  if (bound > mpz_class(2000000)) throw std::domain_error("integer_roots: root bound too large for divisor scan");
  for (mpz_class d = 1; d <= bound && d <= c0; ++d) {
    if (c0 % d != 0) continue;
    candidates.push_back(d);
    candidates.push_back(-d);
  }
  for (const auto& x : candidates) {
    while (p.size() > 1 && eval(p, x) == 0) {
      p = deflate(p, x);
      ++roots[x];
    }
  }
  return roots;
}

mpz_class gershgorin_bound(const QMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
    if (s > best) best = s;
  }
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
  return c;
}

std::map<Rational, std::size_t> rational_eigenvalues(const QMatrix& m) {
  mpz_class d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
  QMatrix scaled = m * Rational(d);
  std::map<Rational, std::size_t> out;
  for (const auto& [root, mult] : integer_roots(charpoly(scaled), gershgorin_bound(scaled)))
  {
    Rational q(root, d);
    q.canonicalize();
    out[q] = mult;
  }
  return out;
}

}  // namespace orbitlab
