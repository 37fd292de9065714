#include "orbitlab/orbit_geometry.hpp"

#include "orbitlab/convex_hull.hpp"
#include "orbitlab/parallel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orbitlab {

namespace {

QVec half_combination(const QVec& a, const QVec& b, int sign) {
  QVec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + sign * b[i]) / 2;
  return out;
}

/// exp(-ad Z) on a Lie algebra; ad Z must be nilpotent.
QMatrix exp_minus_ad(const LieAlgebra& s, const QVec& z) {
  const std::size_t d = s.dim();
  QMatrix ad = s.ad(z);
  ad *= Rational(-1);
  QMatrix result = QMatrix::identity(d), term = QMatrix::identity(d);
  for (std::size_t k = 1;; ++k) {
    term = term * ad;
    if (term.is_zero()) break;
    if (k > d) throw std::logic_error("cascade_signature: ad Z is not nilpotent");
    term *= Rational(1, static_cast<long>(k));
    result += term;
  }
  return result;
}

std::vector<std::size_t> positions(std::size_t n, EliminationOrder order, std::size_t from) {
  std::vector<std::size_t> out;
  for (std::size_t j = from; j < n; ++j) out.push_back(j);
  if (order == EliminationOrder::reversed) std::reverse(out.begin(), out.end());
  return out;
}

QVec t_coords_of_cascade_sum(const Structure& s, const QVec& x_t) {
  // sum_j x_j X_j for X in t with coordinates x_t (the Y_j come first).
  QVec v(s.form->dim(), Rational(0));
  for (std::size_t j = 0; j < s.cascade.r; ++j) v = add(std::move(v), scale(s.cascade.X[j], x_t[j]));
  return v;
}

bool all_plus(const OrbitSignature& sig) {
  return sig.open && std::all_of(sig.signs.begin(), sig.signs.end(), [](int e) { return e > 0; });
}

QVec on_n3(const CascadeData& c, const QVec& values_on_n3) {
  QVec lambda(c.s.dim(), Rational(0));
  for (std::size_t i = 0; i < c.n3_index.size(); ++i) lambda[c.n3_index[i]] = values_on_n3[i];
  return lambda;
}

}  // namespace

std::string OrbitSignature::to_string() const {
  std::ostringstream out;
  if (!open) {
    if (pivot > 0)
      out << "NotOpen(pivot " << pivot << ")";
    else
      out << "NotOpen(" << reason << ")";
    return out.str();
  }
  out << '(';
  for (std::size_t i = 0; i < signs.size(); ++i) out << (i ? "," : "") << (signs[i] > 0 ? '+' : '-');
  out << ')';
  return out.str();
}

OrbitSignature cascade_signature(const CascadeData& c, const QVec& lambda, EliminationOrder order) {
  OrbitSignature sig;
  if (!c.exists_open_orbit) {
    sig.reason = "no open AN-orbit exists";
    return sig;
  }
  if (!c.graded) {
    sig.reason = "roots do not fit the cascade grading";
    return sig;
  }
  if (lambda.size() != c.s.dim()) throw std::invalid_argument("cascade_signature: covector has the wrong length");
  const LieAlgebra& s = *c.s.algebra;
  const RestrictedRootDatum& d = c.roots;
  std::vector<bool> in_n3(c.s.dim(), false);
  for (std::size_t i : c.n3_index) in_n3[i] = true;
  QVec l = lambda;
  auto keep_n3 = [&]() {
    for (std::size_t i = 0; i < l.size(); ++i)
      if (!in_n3[i]) l[i] = 0;
  };
  keep_n3();

  for (std::size_t k = 0; k < c.r; ++k) {
    if (sgn(l[c.x_index[k]]) == 0) {
      sig.pivot = k + 1;
      sig.reason = "pivot " + std::to_string(k + 1) + " vanishes";
      return sig;
    }
    for (std::size_t j : positions(c.r, order, k + 1)) {
      const auto zs = c.s.indices_of(d, half_combination(c.upsilon[k], c.upsilon[j], -1));
      const auto ws = c.s.indices_of(d, half_combination(c.upsilon[k], c.upsilon[j], 1));
      if (ws.empty()) continue;
      // Find Z in g_{(b_k - b_j)/2} with lambda([Z, W]) = lambda(W) on g_{(b_k + b_j)/2}.
      QMatrix m(ws.size(), zs.size());
      QVec rhs(ws.size());
      for (std::size_t b = 0; b < ws.size(); ++b) {
        rhs[b] = l[ws[b]];
        for (std::size_t a = 0; a < zs.size(); ++a)
          for (const auto& t : s.bracket_terms(zs[a], ws[b])) m(b, a) += t.c * l[t.k];
      }
      if (is_zero_vec(rhs)) continue;
      const auto z = solve(m, rhs);
      if (!z) throw std::logic_error("cascade_signature: elimination step has no solution");
      QVec zv(s.dim(), Rational(0));
      for (std::size_t a = 0; a < zs.size(); ++a) zv[zs[a]] = (*z)[a];
      l = left_multiply(l, exp_minus_ad(s, zv));
      keep_n3();
    }
  }
  for (std::size_t i = 0; i < l.size(); ++i)
    if (sgn(l[i]) != 0 && std::find(c.x_index.begin(), c.x_index.end(), i) == c.x_index.end())
      throw std::logic_error("cascade_signature: elimination left an off-diagonal component");
  sig.open = true;
  for (std::size_t k = 0; k < c.r; ++k) sig.signs.push_back(sgn(l[c.x_index[k]]));
  return sig;
}

QMatrix kks_matrix(const LieAlgebra& s, const QVec& lambda) {
  const std::size_t n = s.dim();
  QMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = 0;
      for (const auto& t : s.bracket_terms(i, j)) v += t.c * lambda[t.k];
      b(i, j) = v;
      b(j, i) = -v;
    }
  return b;
}

bool is_open_orbit_point(const CascadeData& c, const QVec& lambda) {
  return rank(kks_matrix(*c.s.algebra, lambda)) == c.s.dim();
}

QVec project_p(const CascadeData& c, const QVec& f) { return c.s.restrict(f); }

QVec project_p1(const CascadeData& c, const QVec& f) {
  if (!c.graded) throw std::logic_error("project_p1: n3 is not defined for this algebra");
  QVec out;
  for (std::size_t i : c.n3_index) out.push_back(dot(f, c.s.in_g.basis()[i]));
  return out;
}

QVec orthogonal_projection(const Subspace& target, const QVec& x) {
  const LieAlgebra& g = target.ambient();
  const QMatrix gram = inner_gram(g);
  const std::size_t k = target.dim();
  if (k == 0) return QVec(g.dim(), Rational(0));
  QMatrix m(k, k);
  QVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const QVec gi = left_multiply(target.basis()[i], gram);
    rhs[i] = dot(gi, x);
    for (std::size_t j = 0; j < k; ++j) m(i, j) = dot(gi, target.basis()[j]);
  }
  const auto c = solve(m, rhs);
  if (!c) throw std::logic_error("orthogonal_projection: singular Gram matrix");
  return target.combine(*c);
}

bool projection_diagram_commutes(const CascadeData& c, const QVec& f) {
  const LieAlgebra& g = *c.roots.g;
  const QMatrix gram = inner_gram(g);
  const auto x_f = solve(gram, f);
  if (!x_f) throw std::logic_error("projection_diagram_commutes: inner product is degenerate");
  const QVec p = orthogonal_projection(c.n3, *x_f);
  if (!c.n3.contains(p)) return false;
  const QVec direct = project_p1(c, f);
  for (std::size_t i = 0; i < c.n3_index.size(); ++i)
    if (inner(g, c.s.in_g.basis()[c.n3_index[i]], p) != direct[i]) return false;
  return true;
}

QVec extend_from_s(const CascadeData& c, const QVec& lambda) {
  const LieAlgebra& g = *c.roots.g;
  const QMatrix gram = inner_gram(g);
  const std::size_t k = c.s.dim();
  QMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const QVec gi = left_multiply(c.s.in_g.basis()[i], gram);
    for (std::size_t j = 0; j < k; ++j) m(i, j) = dot(gi, c.s.in_g.basis()[j]);
  }
  const auto y = solve(m, lambda);
  if (!y) throw std::logic_error("extend_from_s: singular Gram matrix");
  return left_multiply(c.s.in_g.combine(*y), gram);
}

QVec an_coadjoint(const GroupActions& act, const GroupWord& w, const QVec& lambda) {
  const CascadeData& c = act.structure().cascade;
  return c.s.restrict(act.coadjoint(w, extend_from_s(c, lambda)));
}

bool is_strongly_elliptic(const AlgebraPtr& g, const QVec& f) {
  return is_compact_subalgebra(stabilizer(g, Covector{f}));
}

QVec covector_from_t(const Structure& s, const QVec& f_t) {
  const QVec x = s.inner().element_of(f_t);
  return killing_dual(*s.g(), s.t_element(x)).coords;
}

QVec restrict_to_t(const Structure& s, const QVec& f) {
  QVec out;
  for (const auto& v : s.cascade.t.basis()) out.push_back(dot(f, v));
  return out;
}

HolomorphicityResult holomorphicity(const Structure& s, const QVec& f) {
  if (!s.complex) throw std::domain_error(s.form->spec().name() + " has no compact Cartan");
  if (!is_strongly_elliptic(s.g(), f)) throw std::invalid_argument("f is not strongly elliptic");
  if (!stabilizer(s.g(), Covector{f}).contains_subspace(s.cascade.t))
    throw std::domain_error("f is not aligned with t (t is not inside its stabilizer)");
  const ComplexRootDatum& d = s.roots();
  const QVec f_t = restrict_to_t(s, f);
  HolomorphicityResult r;
  for (std::size_t i : d.noncompact()) {
    const int side = sgn(s.inner().product(f_t, d.roots[i].a));
    if (side == 0) throw DegenerateCovector("f vanishes on a noncompact root");
    if (side > 0) r.delta_n_plus.push_back(i);
  }
  r.bracket_closed = bracket_closed(d, r.delta_n_plus);
  r.wk_stable = wk_stable(d, s.weyl_k, r.delta_n_plus);
  if (r.bracket_closed != r.wk_stable)
    throw std::logic_error("holomorphicity: bracket closure and W_K-stability disagree");
  r.holomorphic = r.bracket_closed;
  return r;
}

bool is_holomorphic(const Structure& s, const QVec& f) { return holomorphicity(s, f).holomorphic; }

GroupWord sample_word(const GroupActions& act, std::uint64_t seed, std::uint64_t index) {
  if (index == 0) return {};
  auto rng = sample_rng(seed, index);
  return act.random_g_word(rng, 3, 2);
}

QVec sample_orbit_point(const GroupActions& act, const QVec& f, std::uint64_t seed, std::uint64_t index) {
  return act.coadjoint(sample_word(act, seed, index), f);
}

std::vector<double> sample_orbit_point_float(const GroupActions& act, const QVec& f, std::uint64_t seed,
                                             std::uint64_t index) {
  std::vector<double> fd;
  for (const auto& v : f) fd.push_back(v.get_d());
  if (index == 0) return fd;
  auto rng = sample_rng(seed, index);
  GroupWord w;
  const Subspace all = whole(act.structure().g());
  for (int i = 0; i < 3; ++i) w.letters.emplace_back(FloatExp{act.random_in(rng, all, 4), 0.125});
  return act.coadjoint_float(w, fd);
}

SignatureVerdict verify_holomorphic_signatures(const GroupActions& act, const QVec& f, std::size_t n_samples, std::uint64_t seed) {
  const Structure& s = act.structure();
  const CascadeData& c = s.cascade;
  if (!is_strongly_elliptic(s.g(), f)) throw std::invalid_argument("f is not strongly elliptic");
  SignatureVerdict v;
  v.n_samples = n_samples;
  v.seed = seed;
  v.exists_open_orbit = c.exists_open_orbit;
  const HolomorphicityResult hol = holomorphicity(s, f);
  v.holomorphic = hol.holomorphic;
  v.delta_n_plus = hol.delta_n_plus;

  struct Sample {
    OrbitSignature sig;
    bool kks_open = false;
    bool order_agrees = true;
  };
  auto run = [&](std::size_t i) {
    Sample out;
    const QVec lambda = project_p(c, sample_orbit_point(act, f, seed, i));
    out.sig = cascade_signature(c, lambda);
    out.kks_open = is_open_orbit_point(c, lambda);
    if (i % 10 == 0) out.order_agrees = cascade_signature(c, lambda, EliminationOrder::reversed) == out.sig;
    return out;
  };

  const std::size_t batch = 16;
  std::optional<OrbitSignature> first;
  bool witness = false;
  for (std::size_t start = 0; start < n_samples && !(witness && !v.holomorphic); start += batch) {
    const auto results = parallel_map(start, std::min(n_samples, start + batch), run);
    for (std::size_t k = 0; k < results.size(); ++k) {
      const std::size_t i = start + k;
      const Sample& r = results[k];
      ++v.samples_used;
      ++v.signatures_histogram[r.sig.to_string()];
      if (r.sig.open != r.kks_open)
        v.failures.push_back("sample " + std::to_string(i) + ": signature " + r.sig.to_string() +
                             " disagrees with the KKS rank test");
      if (!r.order_agrees) v.failures.push_back("sample " + std::to_string(i) + ": elimination order changes the signature");
      if (!c.exists_open_orbit) continue;
      if (!first) first = r.sig;
      const bool differs = !r.sig.open || !(r.sig == *first);
      if (differs) {
        witness = true;
        if (v.witnesses.size() < 8) v.witnesses.push_back({i, r.sig.to_string()});
      }
    }
  }

  if (!c.exists_open_orbit) {
    if (v.holomorphic) v.failures.push_back("holomorphic element although no open AN-orbit exists");
    v.verdict = v.failures.empty() ? "NO-OPEN-ORBIT" : "INCONSISTENT";
    return v;
  }
  if (v.holomorphic && witness)
    v.failures.push_back("holomorphic f with non-constant or non-open projected signature");
  if (!v.failures.empty())
    v.verdict = "INCONSISTENT";
  else if (v.holomorphic)
    v.verdict = "CONSISTENT-HOLOMORPHIC";
  else
    v.verdict = witness ? "CONSISTENT-NONHOLOMORPHIC" : "INCONCLUSIVE";
  return v;
}

QVec sample_c_max(const Structure& s, std::mt19937_64& rng) {
  const ComplexRootDatum& d = s.roots();
  const QVec z0 = z0_element(d);
  const std::size_t l = z0.size();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Rational m(static_cast<long>(1 + rng() % 4));
    QVec x(l);
    for (std::size_t i = 0; i < l; ++i) {
      Rational jitter(static_cast<long>(rng() % 9) - 4, 8);
      jitter.canonicalize();
      x[i] = -m * z0[i] + jitter;
    }
    bool inside = true;
    for (std::size_t i : d.delta_n_plus) inside = inside && sgn(dot(d.roots[i].a, x)) > 0;
    if (inside) return x;
  }
  throw std::logic_error("sample_c_max: rejection sampling failed");
}

QVec sample_omega_plus(const GroupActions& act, std::mt19937_64& rng) {
  static const Rational weights[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  const Structure& s = act.structure();
  const CascadeData& c = s.cascade;
  QVec v(s.form->dim(), Rational(0));
  for (std::size_t j = 0; j < c.r; ++j) v = add(std::move(v), scale(c.X[j], weights[rng() % 4]));
  const QVec z = act.random_in(rng, c.nc, 2);
  GroupWord w;
  w.letters.emplace_back(NilpotentExp{s.g()->apply_theta(z)});
  return act.adjoint(w, v);
}

ConeReport cone_tests(const GroupActions& act, std::size_t n_samples, std::uint64_t seed) {
  const Structure& s = act.structure();
  if (!s.hermitian) throw std::invalid_argument("cone tests need an algebra of Hermitian type");
  const CascadeData& c = s.cascade;
  const LieAlgebra& g = *s.g();
  const QMatrix gram = inner_gram(g);
  auto ip = [&](const QVec& u, const QVec& w) { return dot(u, gram * w); };
  auto covector_on_s = [&](const QVec& x) { return c.s.restrict(left_multiply(x, gram)); };

  struct Sample {
    bool a = false, b = false, in_n3 = false, omega_plus = false, omega_pair = false, self_dual = false, an_translate = false;
  };
  auto run = [&](std::size_t i) {
    Sample out;
    auto rng = sample_rng(seed, i);
    const QVec x = s.t_element(sample_c_max(s, rng));
    const GroupWord g1 = act.random_g_word(rng, 3, 2);
    const GroupWord g2 = act.random_g_word(rng, 3, 2);
    const QVec ax = act.adjoint(g1, x);
    out.a = sgn(ip(ax, act.adjoint(g2, c.X[0]))) > 0;
    out.b = all_plus(cascade_signature(c, covector_on_s(ax)));

    const QVec omega = sample_omega_plus(act, rng);
    const QVec omega2 = sample_omega_plus(act, rng);
    out.in_n3 = c.n3.contains(omega);
    out.omega_plus = all_plus(cascade_signature(c, covector_on_s(omega)));
    out.omega_pair = sgn(ip(ax, omega)) > 0;
    out.self_dual = sgn(ip(omega, omega2)) > 0;

    // (b . f)|n3 = <pr_n3 Ad(theta b) sum x_j X_j, .> for X_f = sum x_j Y_j + X_0.
    const QVec xf_t = sample_c_max(s, rng);
    const QVec f = killing_dual(g, s.t_element(xf_t)).coords;
    const GroupWord b = act.random_an_word(rng, 4);
    const QVec lhs = project_p1(c, act.coadjoint(b, f));
    const QVec moved = orthogonal_projection(c.n3, act.adjoint(act.theta(b), t_coords_of_cascade_sum(s, xf_t)));
    bool equal = true;
    for (std::size_t k = 0; k < c.n3_index.size(); ++k)
      equal = equal && ip(c.s.in_g.basis()[c.n3_index[k]], moved) == lhs[k];
    out.an_translate = equal && all_plus(cascade_signature(c, on_n3(c, lhs)));
    return out;
  };

  ConeReport rep;
  const auto results = parallel_map(0, n_samples, run);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Sample& r = results[i];
    ++rep.pairs;
    auto count = [&](bool ok, std::size_t& counter, const char* what) {
      if (ok)
        ++counter;
      else
        rep.failures.push_back("sample " + std::to_string(i) + ": " + what);
    };
    count(r.a, rep.c_max_positive, "<Ad(g)X, Ad(g')X_1> <= 0");
    count(r.b, rep.projection_all_plus, "projection of a C_max point is not all-plus");
    count(r.in_n3, rep.omega_in_n3, "Omega sample outside n3");
    count(r.omega_plus, rep.omega_all_plus, "Omega sample is not all-plus");
    count(r.omega_pair, rep.omega_pairing_positive, "<C_max point, Omega> <= 0");
    count(r.self_dual, rep.omega_self_dual, "<Omega, Omega'> <= 0");
    count(r.an_translate, rep.an_translate_identity, "AN-translate of f does not match Ad(theta N) sum c_j X_j");
  }
  return rep;
}

WitnessSearch cone_witness_search(const GroupActions& act, const QVec& x_t, std::size_t budget, std::uint64_t seed) {
  const Structure& s = act.structure();
  const LieAlgebra& g = *s.g();
  const QMatrix gram = inner_gram(g);
  const QVec x = s.t_element(x_t);
  WitnessSearch out;
  for (std::size_t i = 0; i < budget; ++i) {
    ++out.attempts;
    GroupWord g1, g2;
    if (i > 0) {
      auto rng = sample_rng(seed, i);
      g1 = act.random_g_word(rng, 3, i % 2 ? 2 : 0);
      if (i % 3 == 0) g2 = act.random_g_word(rng, 2, 2);
    }
    const Rational v = dot(act.adjoint(g1, x), gram * act.adjoint(g2, s.cascade.X[0]));
    if (sgn(v) <= 0) {
      out.found = true;
      out.detail = "sample " + std::to_string(i) + ": <Ad(g)X, Ad(g')X_1> = " + to_string(v);
      return out;
    }
  }
  return out;
}

X1SignReport x1_sign_check(const GroupActions& act, const CanonicalRep& rep, std::size_t n_samples, std::uint64_t seed) {
  const CascadeData& c = act.structure().cascade;
  if (!c.exists_open_orbit) throw std::logic_error("x1_sign_check: no open AN-orbit exists");
  X1SignReport out;
  out.signs = rep.signs;
  auto run = [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const QVec l = an_coadjoint(act, act.random_an_word(rng, 4 + i % 3), rep.covector);
    std::pair<int, int> s{sgn(l[c.x_index[0]]), c.r > 1 ? sgn(l[c.x_index[1]]) : 0};
    return s;
  };
  const auto results = parallel_map(0, n_samples, run);
  for (std::size_t i = 0; i < results.size(); ++i) {
    ++out.samples;
    if (results[i].first != rep.signs[0]) {
      out.x1_sign_constant = false;
      if (!out.first_x1_flip) out.first_x1_flip = i;
    }
    if (c.r > 1 && results[i].second != rep.signs[1] && !out.x2_flip) out.x2_flip = i;
  }
  return out;
}

bool KostantHullReport::all_inside() const {
  return std::all_of(members.begin(), members.end(), [](const auto& m) { return m.second; });
}

KostantHullReport kostant_hull_check(const Structure& s) {
  if (!s.hermitian) throw std::invalid_argument("kostant_hull_check needs an algebra of Hermitian type");
  const ComplexRootDatum& d = s.roots();
  KostantHullReport rep;
  rep.beta = d.roots[s.alpha.front()].a;
  for (const auto& w : s.weyl_k) {
    QVec image = w * rep.beta;
    if (std::find(rep.orbit.begin(), rep.orbit.end(), image) == rep.orbit.end()) rep.orbit.push_back(std::move(image));
  }
  for (std::size_t i : d.delta_n_plus) rep.members.emplace_back(d.roots[i].a, in_convex_hull(d.roots[i].a, rep.orbit));
  rep.orbit_sum = QVec(rep.beta.size(), Rational(0));
  for (const auto& w : s.weyl_k) rep.orbit_sum = add(std::move(rep.orbit_sum), w * rep.beta);
  rep.orbit_sum_fixed = std::all_of(s.weyl_k.begin(), s.weyl_k.end(), [&](const QMatrix& w) { return w * rep.orbit_sum == rep.orbit_sum; });
  return rep;
}

}  // namespace orbitlab
