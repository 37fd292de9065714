#include "orbitlab/complex_roots.hpp"

#include "orbitlab/real_forms.hpp"

#include <algorithm>
#include <set>

namespace orbitlab {

namespace {

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

/// a with ad(T_m) v = i a_m v for every m, or nullopt if v is not a joint
/// eigenvector.
std::optional<QVec> joint_eigenvalue(const std::vector<CMatrix>& ads, const CVec& v) {
  std::size_t p = 0;
  while (v[p].is_zero()) ++p;
  QVec a(ads.size());
  for (std::size_t m = 0; m < ads.size(); ++m) {
    const CVec w = ads[m] * v;
    const Gaussian ratio = w[p] / v[p];
    if (sgn(ratio.re) != 0) return std::nullopt;
    a[m] = ratio.im;
    if (w != scale(v, Gaussian(Rational(0), a[m]))) return std::nullopt;
  }
  return a;
}

}  // namespace

InnerProductOnT::InnerProductOnT(const Subspace& t) : InnerProductOnT(killing_gram(t) * Rational(-1)) {}

InnerProductOnT::InnerProductOnT(QMatrix gram) : gram_(std::move(gram)) {
  if (!is_positive_definite(gram_)) throw std::invalid_argument("InnerProductOnT: not positive definite");
  inv_ = inverse(gram_);
}

std::optional<std::size_t> ComplexRootDatum::find(const QVec& a) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].a == a) return i;
  return std::nullopt;
}

std::vector<std::size_t> ComplexRootDatum::compact() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].compact) out.push_back(i);
  return out;
}

std::vector<std::size_t> ComplexRootDatum::noncompact() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (!roots[i].compact) out.push_back(i);
  return out;
}

ComplexRootDatum root_decomposition(const AlgebraPtr& g, const Subspace& t) {
  const std::size_t d = g->dim();
  const std::size_t l = t.dim();
  if (l == 0) throw std::invalid_argument("root_decomposition: empty torus");
  std::vector<QMatrix> ads;
  std::vector<CMatrix> cads;
  for (const auto& v : t.basis()) {
    ads.push_back(g->ad(v));
    cads.push_back(to_complex(ads.back()));
  }

  for (long base : {7L, 13L, 29L, 59L, 101L}) {
    QMatrix m(d, d);
    long w = 1;
    for (std::size_t k = l; k-- > 0;) {
      m += ads[k] * Rational(w);
      w *= base;
    }
    const QMatrix minus_sq = (m * m) * Rational(-1);
    const auto eig = rational_eigenvalues(minus_sq);
    std::size_t total = 0;
    for (const auto& [mu, mult] : eig) total += mult;
    if (total != d) throw std::logic_error("root_decomposition: eigenvalue outside iQ");
    if (kernel(m).size() != l) throw std::logic_error("root_decomposition: t is not self-centralizing");

    ComplexRootDatum out;
    out.g = g;
    out.t = t;
    bool separated = true;
    const CMatrix cm = to_complex(m);
    for (const auto& [mu, mult] : eig) {
      if (sgn(mu) == 0) continue;
      Rational k;
      if (!rational_sqrt(mu, k)) throw std::logic_error("root_decomposition: eigenvalue outside iQ");
      for (int s : {1, -1}) {
        CMatrix shifted = cm;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= Gaussian(Rational(0), Rational(k * s));
        const auto space = kernel(shifted);
        if (space.size() != 1) {
          separated = false;
          break;
        }
        auto a = joint_eigenvalue(cads, space.front());
        if (!a) {
          separated = false;
          break;
        }
        ComplexRoot root{*a, space.front(), false};
        const CVec th = to_complex(g->theta()) * root.vector;
        if (th == root.vector)
          root.compact = true;
        else if (th != scale(root.vector, Gaussian(-1)))
          throw std::logic_error("root_decomposition: root space is not theta-stable");
        out.roots.push_back(std::move(root));
      }
      if (!separated) break;
    }
    if (!separated) continue;
    if (out.roots.size() != d - l) throw std::logic_error("root_decomposition: wrong number of roots");
    std::sort(out.roots.begin(), out.roots.end(),
              [](const ComplexRoot& x, const ComplexRoot& y) { return lex_compare(x.a, y.a) > 0; });

    // Lexicographic regular element x_m = N^(l-1-m).
    const auto compact = out.compact();
    for (long n = 2;; ++n) {
      QVec x(l);
      long p = 1;
      for (std::size_t i = l; i-- > 0;) {
        x[i] = p;
        p *= n;
      }
      bool regular = true;
      for (std::size_t i : compact) regular = regular && sgn(dot(out.roots[i].a, x)) != 0;
      if (!regular) continue;
      out.regular_element = x;
      for (std::size_t i : compact)
        if (sgn(dot(out.roots[i].a, x)) > 0) out.delta_c_plus.push_back(i);
      break;
    }
    return out;
  }
  throw std::logic_error("root_decomposition: could not separate root spaces");
}

std::optional<QVec> central_element(const ComplexRootDatum& d) {
  const std::size_t l = d.t.dim();
  const auto compact = d.compact();
  std::vector<QVec> rows;
  for (std::size_t i : compact) rows.push_back(d.roots[i].a);
  const auto center = rows.empty() ? kernel(QMatrix(0, l)) : kernel(QMatrix::from_rows(rows));
  if (center.empty()) return std::nullopt;
  for (const auto& z : center) {
    bool separates = true;
    for (std::size_t i : d.noncompact()) separates = separates && sgn(dot(d.roots[i].a, z)) != 0;
    if (separates) return z;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> holomorphic_system_containing(const ComplexRootDatum& d, std::size_t anchor) {
  auto z = central_element(d);
  if (!z) return std::nullopt;
  const int side = sgn(dot(d.roots.at(anchor).a, *z));
  std::vector<std::size_t> out;
  for (std::size_t i : d.noncompact())
    if (sgn(dot(d.roots[i].a, *z)) == side) out.push_back(i);
  return out;
}

QMatrix reflection(const QVec& alpha, const InnerProductOnT& ip) {
  // s(mu) = mu - 2 (mu, alpha)/(alpha, alpha) alpha
  const std::size_t l = alpha.size();
  const QVec ga = ip.element_of(alpha);  // G^{-1} alpha
  const Rational norm = dot(alpha, ga);
  QMatrix s = QMatrix::identity(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) s(i, j) -= 2 * alpha[i] * ga[j] / norm;
  return s;
}

std::vector<QMatrix> weyl_group_K(const ComplexRootDatum& d, const InnerProductOnT& ip, std::size_t bound) {
  const std::size_t l = d.t.dim();
  std::vector<QMatrix> gens;
  for (std::size_t i : d.delta_c_plus) gens.push_back(reflection(d.roots[i].a, ip));
  std::vector<QMatrix> group{QMatrix::identity(l)};
  for (std::size_t head = 0; head < group.size(); ++head)
    for (const auto& s : gens) {
      QMatrix w = s * group[head];
      if (std::find(group.begin(), group.end(), w) == group.end()) {
        group.push_back(std::move(w));
        if (group.size() > bound) throw std::logic_error("weyl_group_K: closure exceeds bound");
      }
    }
  for (const auto& w : group)
    if (!(w.transpose() * ip.gram_inverse() * w == ip.gram_inverse()))
      throw std::logic_error("weyl_group_K: element is not orthogonal");
  return group;
}

QVec z0_element(const ComplexRootDatum& d) {
  const std::size_t l = d.t.dim();
  if (!central_element(d)) throw std::domain_error("z0_element: centre of k is trivial");
  if (d.delta_n_plus.empty()) throw std::domain_error("z0_element: no holomorphic system chosen");
  std::vector<QVec> rows;
  QVec rhs;
  for (std::size_t i : d.delta_n_plus) {
    rows.push_back(d.roots[i].a);
    rhs.emplace_back(-1);
  }
  for (std::size_t i : d.compact()) {
    rows.push_back(d.roots[i].a);
    rhs.emplace_back(0);
  }
  const QMatrix m = QMatrix::from_rows(rows);
  auto z = solve(m, rhs);
  if (!z) throw std::domain_error("z0_element: inconsistent system (positive system not holomorphic)");
  if (rank(m) != l) throw std::domain_error("z0_element: solution is not unique");
  return *z;
}

RhoVectors rho_vectors(const ComplexRootDatum& d, const std::vector<std::size_t>& compact_positive,
                       const std::vector<std::size_t>& noncompact_positive) {
  const std::size_t l = d.t.dim();
  RhoVectors r{QVec(l, Rational(0)), QVec(l, Rational(0)), QVec(l, Rational(0))};
  const Rational h(1, 2);
  for (std::size_t i : compact_positive) r.rho_K = add(std::move(r.rho_K), scale(d.roots[i].a, h));
  for (std::size_t i : noncompact_positive) r.rho_n = add(std::move(r.rho_n), scale(d.roots[i].a, h));
  r.rho_G = add(r.rho_K, r.rho_n);
  return r;
}

RhoVectors rho_vectors(const ComplexRootDatum& d) { return rho_vectors(d, d.delta_c_plus, d.delta_n_plus); }

PositiveSystem positive_system_of(const ComplexRootDatum& d, const InnerProductOnT& ip, const QVec& lambda) {
  PositiveSystem p;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    const int s = sgn(ip.product(lambda, d.roots[i].a));
    if (s == 0) throw std::invalid_argument("weight is singular");
    if (s > 0) (d.roots[i].compact ? p.compact : p.noncompact).push_back(i);
  }
  return p;
}

bool wk_stable(const ComplexRootDatum& d, const std::vector<QMatrix>& wk, const std::vector<std::size_t>& noncompact) {
  std::set<std::size_t> members(noncompact.begin(), noncompact.end());
  for (const auto& w : wk)
    for (std::size_t i : noncompact) {
      auto j = d.find(w * d.roots[i].a);
      if (!j) throw std::logic_error("wk_stable: W_K does not permute the roots");
      if (!members.count(*j)) return false;
    }
  return true;
}

bool bracket_closed(const ComplexRootDatum& d, const std::vector<std::size_t>& noncompact) {
  if (noncompact.empty()) return true;
  std::vector<CVec> vs;
  for (std::size_t i : noncompact) vs.push_back(d.roots[i].vector);
  const CoordinateMap<Gaussian> span_map(vs);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const CVec b = d.g->bracket(vs[i], vs[j]);
      if (!is_zero_vec(b) && !span_map.contains(b)) return false;
    }
  return true;
}

}  // namespace orbitlab
