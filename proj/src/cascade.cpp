#include "orbitlab/cascade.hpp"

#include <algorithm>

namespace orbitlab {

namespace {

bool is_rational_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

/// Greedy maximal abelian subalgebra of a compact Lie algebra c.
Subspace maximal_abelian(const Subspace& c) {
  std::vector<QVec> chosen;
  for (;;) {
    const Subspace z = centralizer(chosen, c);
    const Subspace current(c.ambient_ptr(), chosen);
    if (z.dim() == current.dim()) return current;
    for (const auto& v : z.basis())
      if (!current.contains(v)) {
        chosen.push_back(v);
        break;
      }
  }
}

}  // namespace

std::vector<std::size_t> SolvablePart::indices_of(const RestrictedRootDatum& d, const QVec& beta) const {
  std::vector<std::size_t> out;
  auto idx = d.find(beta);
  if (!idx) return out;
  for (std::size_t i = 0; i < root.size(); ++i)
    if (root[i] == idx) out.push_back(i);
  return out;
}

QVec SolvablePart::restrict(const QVec& f_on_g) const {
  QVec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = dot(f_on_g, in_g.basis()[i]);
  return out;
}

bool strongly_orthogonal(const RestrictedRootDatum& d, const QVec& b, const QVec& c) {
  return b != c && !d.is_root(add(b, c)) && !d.is_root(sub(b, c));
}

Rational killing_dual_product(const RestrictedRootDatum& d, const QVec& beta, const QVec& gamma) {
  const QMatrix inv = inverse(killing_gram(d.a));
  return dot(beta, inv * gamma);
}

QVec CascadeData::cascade_coords(const QVec& gamma) const {
  if (r != roots.a.dim()) throw std::logic_error("cascade does not span a*");
  // gamma = sum c_i beta_i
  QMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t m = 0; m < r; ++m) b(m, i) = upsilon[i][m];
  auto c = solve(b, gamma);
  if (!c) throw std::logic_error("cascade_coords: inconsistent");
  return *c;
}

CascadeData build_cascade(const RestrictedRootDatum& d, const std::vector<int>& orientation) {
  CascadeData c;
  c.roots = d;
  c.n = iwasawa_n(d);
  const LieAlgebra& g = *d.g;

  // Highest remaining positive root strongly orthogonal to the chosen ones;
  // positive roots are stored in decreasing lexicographic order.
  for (std::size_t i : d.positive) {
    const QVec& beta = d.roots[i].coords;
    bool ok = true;
    for (const auto& chosen : c.upsilon) ok = ok && strongly_orthogonal(d, beta, chosen);
    if (ok) c.upsilon.push_back(beta);
  }
  c.r = c.upsilon.size();

  bool mult_one = true;
  for (const auto& beta : c.upsilon) mult_one = mult_one && d.root(beta).multiplicity() == 1;
  c.exists_open_orbit = c.r == d.a.dim() && mult_one;
  if (!c.exists_open_orbit)
    c.no_open_orbit_reason = c.r != d.a.dim() ? "cascade shorter than dim a" : "a cascade root has multiplicity > 1";

  // X_j normalized so that beta_j(-[X_j, theta X_j]) = 2.
  for (std::size_t j = 0; j < c.r; ++j) {
    QVec x = d.root(c.upsilon[j]).space.basis().front();
    const QVec h = g.bracket(x, g.apply_theta(x));
    const Rational q = -dot(c.upsilon[j], d.a.coords(h)) / 2;
    if (sgn(q) <= 0) throw std::logic_error("build_cascade: [X, theta X] has the wrong sign");
    Rational root;
    // q is 1 for every realization in scope; a non-square q leaves X_j unscaled.
    if (is_rational_square(q, root)) x = scale(x, Rational(1 / root));
    if (j < orientation.size() && orientation[j] < 0) x = scale(x, Rational(-1));
    c.Y.push_back(add(x, g.apply_theta(x)));
    c.X.push_back(std::move(x));
  }

  // Graded pieces.
  if (c.r == d.a.dim()) {
    std::vector<QVec> v1 = d.a.basis(), v3, vc, vhalf;
    bool ok = true;
    for (std::size_t idx : d.positive) {
      const QVec cc = c.cascade_coords(d.roots[idx].coords);
      std::vector<std::size_t> nz;
      for (std::size_t i = 0; i < c.r; ++i)
        if (sgn(cc[i]) != 0) nz.push_back(i);
      const Rational h(1, 2);
      std::vector<QVec>* target = nullptr;
      if (nz.size() == 1 && cc[nz[0]] == 1)
        target = &v3;
      else if (nz.size() == 1 && cc[nz[0]] == h)
        target = &vhalf;
      else if (nz.size() == 2 && cc[nz[0]] == h && cc[nz[1]] == h)
        target = &v3;
      else if (nz.size() == 2 && cc[nz[0]] == h && cc[nz[1]] == -h)
        target = &vc;
      if (!target) {
        ok = false;
        break;
      }
      for (const auto& v : d.roots[idx].space.basis()) target->push_back(v);
    }
    if (ok) {
      c.graded = true;
      c.nc = Subspace(d.g, vc);
      v1.insert(v1.end(), vc.begin(), vc.end());
      c.n1 = Subspace(d.g, v1);
      c.n3 = Subspace(d.g, v3);
      std::vector<QVec> v2 = v3;
      v2.insert(v2.end(), vhalf.begin(), vhalf.end());
      c.n2 = Subspace(d.g, v2);
    }
  }

  // Compact Cartan.
  const Subspace m_y = centralizer(c.Y, d.m);
  c.h_k = maximal_abelian(m_y);
  try {
    c.t = compact_cartan(c, c.h_k);
    c.has_compact_cartan = true;
  } catch (const std::logic_error& e) {
    // Unequal-rank algebras such as so(5,1) have no compact Cartan.
    c.compact_cartan_failure = e.what();
    c.t = Subspace(d.g, {});
  }

  // a + n in the adapted basis.
  std::vector<QVec> sb = d.a.basis();
  c.s.root.assign(sb.size(), std::nullopt);
  for (std::size_t idx : d.positive) {
    const auto it = std::find(c.upsilon.begin(), c.upsilon.end(), d.roots[idx].coords);
    if (it != c.upsilon.end() && d.roots[idx].multiplicity() == 1) {
      c.x_index.push_back(sb.size());
      sb.push_back(c.X[static_cast<std::size_t>(it - c.upsilon.begin())]);
      c.s.root.push_back(idx);
      continue;
    }
    for (const auto& v : d.roots[idx].space.basis()) {
      sb.push_back(v);
      c.s.root.push_back(idx);
    }
  }
  // x_index must follow the order of upsilon.
  std::sort(c.x_index.begin(), c.x_index.end(), [&](std::size_t a, std::size_t b) {
    return lex_compare(d.roots[*c.s.root[a]].coords, d.roots[*c.s.root[b]].coords) > 0;
  });
  c.s.in_g = Subspace(d.g, sb);
  c.s.algebra = std::make_shared<const LieAlgebra>(restrict_to(c.s.in_g));
  if (c.graded)
    for (std::size_t i = 0; i < c.s.dim(); ++i)
      if (c.n3.contains(sb[i])) c.n3_index.push_back(i);
  return c;
}

std::vector<CanonicalRep> canonical_representatives(const CascadeData& c) {
  if (!c.exists_open_orbit) throw std::logic_error("canonical_representatives: no open AN-orbit exists");
  std::vector<CanonicalRep> out;
  const std::size_t count = std::size_t{1} << c.r;
  for (std::size_t mask = 0; mask < count; ++mask) {
    CanonicalRep rep;
    rep.covector.assign(c.s.dim(), Rational(0));
    for (std::size_t j = 0; j < c.r; ++j) {
      const int e = (mask >> (c.r - 1 - j)) & 1 ? -1 : 1;
      rep.signs.push_back(e);
      rep.covector[c.x_index[j]] = e;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

HypothesisReport verify_splitting_hypotheses(const CascadeData& c) {
  if (!c.exists_open_orbit) return {false, "no open AN-orbit: " + c.no_open_orbit_reason};
  if (!c.graded) return {false, "positive roots do not fit the cascade grading"};
  const Subspace an = sum(c.roots.a, c.n);
  if (!is_subalgebra(c.n1)) return {false, "n1 is not a subalgebra"};
  if (!is_ideal(c.n2, an)) return {false, "n2 is not an ideal of a + n"};
  if (!is_ideal(c.n3, an)) return {false, "n3 is not an ideal of a + n"};
  if (!is_abelian(c.n3)) return {false, "n3 is not abelian"};
  if (!brackets_into(c.n2, c.n2, c.n3)) return {false, "[n2, n2] is not inside n3"};
  if (!brackets_into(c.n2, c.n3, Subspace(c.roots.g, {}))) return {false, "[n2, n3] != 0"};
  if (c.n1.dim() + c.n2.dim() != an.dim()) return {false, "a + n != n1 + n2"};
  if (c.n3.dim() != c.n1.dim()) return {false, "dim n3 != dim n1"};
  return {true, ""};
}

Subspace compact_cartan(const CascadeData& c, const Subspace& h_k) {
  const AlgebraPtr& g = c.roots.g;
  std::vector<QVec> b = c.Y;
  b.insert(b.end(), h_k.basis().begin(), h_k.basis().end());
  Subspace t(g, b);
  if (!is_abelian(t)) throw std::logic_error("compact_cartan: not abelian");
  for (const auto& v : t.basis())
    if (g->apply_theta(v) != v) throw std::logic_error("compact_cartan: not theta-fixed");
  if (!is_compact_subalgebra(t)) throw std::logic_error("compact_cartan: Killing form not negative definite");
  if (centralizer(t.basis(), whole(g)).dim() != t.dim()) throw std::logic_error("compact_cartan: not of full rank");
  return t;
}

}  // namespace orbitlab
