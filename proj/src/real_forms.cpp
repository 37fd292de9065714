#include "orbitlab/real_forms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace orbitlab {

namespace {

constexpr std::size_t kMaxMatrixSize = 10;

using LinearMap = std::function<CMatrix(const CMatrix&)>;

CMatrix unit_matrix(std::size_t n, std::size_t a, std::size_t b, const Gaussian& c = Gaussian(1)) {
  CMatrix m(n, n);
  m(a, b) = c;
  return m;
}

QVec flatten(const CMatrix& m) {
  const std::size_t cells = m.rows() * m.cols();
  QVec v(2 * cells);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v[i * m.cols() + j] = m(i, j).re;
      v[cells + i * m.cols() + j] = m(i, j).im;
    }
  return v;
}

CMatrix unflatten(const QVec& v, std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Gaussian(v[i * n + j], v[n * n + i * n + j]);
  return m;
}

CMatrix diag_signature(std::size_t p, std::size_t q) {
  CMatrix j(p + q, p + q);
  for (std::size_t i = 0; i < p + q; ++i) j(i, i) = i < p ? Gaussian(1) : Gaussian(-1);
  return j;
}

CMatrix symplectic_form(std::size_t n) {
  CMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

CMatrix transpose_c(const CMatrix& m) { return m.transpose(); }

CMatrix trace_as_matrix(const CMatrix& x) {
  CMatrix t(1, 1);
  for (std::size_t i = 0; i < x.rows(); ++i) t(0, 0) += x(i, i);
  return t;
}

/// Solutions of L(X) = 0 for all maps, as complex matrices.
std::vector<CMatrix> solve_constraints(std::size_t n, const std::vector<LinearMap>& maps) {
  std::vector<CMatrix> real_basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) real_basis.push_back(unit_matrix(n, a, b));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) real_basis.push_back(unit_matrix(n, a, b, kI));

  std::vector<QVec> columns;
  for (const auto& e : real_basis) {
    QVec col;
    for (const auto& l : maps) {
      QVec part = flatten(l(e));
      col.insert(col.end(), part.begin(), part.end());
    }
    columns.push_back(std::move(col));
  }
  const QMatrix m = QMatrix::from_columns(columns, columns.front().size());
  std::vector<CMatrix> out;
  for (const auto& z : kernel(m)) out.push_back(unflatten(z, n));
  return out;
}

std::string describe(const CMatrix& m) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, bool imag, std::size_t i, std::size_t j) {
    if (sgn(c) == 0) return;
    if (sgn(c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    const Rational a = abs(c);
    if (a != 1) os << a.get_str();
    if (imag) os << "i";
    os << "E" << (i + 1) << "," << (j + 1);
    first = false;
  };
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      term(m(i, j).re, false, i, j);
      term(m(i, j).im, true, i, j);
    }
  return first ? "0" : os.str();
}

/// The standard maximal abelian subspace of p in each realization.
std::vector<CMatrix> standard_a(const RealFormSpec& s) {
  std::vector<CMatrix> out;
  const std::size_t n = s.matrix_size();
  switch (s.family) {
    case Family::su_pq:
    case Family::so_p_q: {
      const std::size_t p = s.params[0], q = s.params[1];
      for (std::size_t m = 0; m < std::min(p, q); ++m) {
        CMatrix h(n, n);
        h(m, p + m) = 1;
        h(p + m, m) = 1;
        out.push_back(std::move(h));
      }
      break;
    }
    case Family::sp_2n_R: {
      const std::size_t k = s.params[0];
      for (std::size_t m = 0; m < k; ++m) {
        CMatrix h(n, n);
        h(m, m) = 1;
        h(k + m, k + m) = -1;
        out.push_back(std::move(h));
      }
      break;
    }
    case Family::so_2n_star: {
      // X = [[0, B], [-B, 0]] with B = E_{2m-1,2m} - E_{2m,2m-1}.
      const std::size_t k = s.params[0];
      for (std::size_t m = 0; m < k / 2; ++m) {
        CMatrix h(n, n);
        const std::size_t a = 2 * m, b = 2 * m + 1;
        h(a, k + b) = 1;
        h(b, k + a) = -1;
        h(k + a, b) = -1;
        h(k + b, a) = 1;
        out.push_back(std::move(h));
      }
      break;
    }
  }
  return out;
}

std::vector<LinearMap> defining_constraints(const RealFormSpec& s) {
  const std::size_t n = s.matrix_size();
  switch (s.family) {
    case Family::su_pq: {
      const CMatrix j = diag_signature(s.params[0], s.params[1]);
      return {[j](const CMatrix& x) { return adjoint(x) * j + j * x; }, trace_as_matrix};
    }
    case Family::sp_2n_R: {
      const CMatrix j = symplectic_form(n / 2);
      return {[](const CMatrix& x) { return x - conjugate(x); },
              [j](const CMatrix& x) { return transpose_c(x) * j + j * x; }};
    }
    case Family::so_p_q: {
      const CMatrix j = diag_signature(s.params[0], s.params[1]);
      return {[](const CMatrix& x) { return x - conjugate(x); },
              [j](const CMatrix& x) { return transpose_c(x) * j + j * x; }};
    }
    case Family::so_2n_star: {
      const CMatrix k = diag_signature(n / 2, n / 2);
      const CMatrix j = symplectic_form(n / 2);
      return {[k](const CMatrix& x) { return adjoint(x) * k + k * x; },
              [j](const CMatrix& x) { return x * j - j * conjugate(x); }};
    }
  }
  throw std::invalid_argument("unknown family");
}

std::size_t expected_dim(const RealFormSpec& s) {
  const std::size_t n = s.matrix_size();
  switch (s.family) {
    case Family::su_pq: return n * n - 1;
    case Family::sp_2n_R: return (n / 2) * (n + 1);
    case Family::so_p_q: return n * (n - 1) / 2;
    case Family::so_2n_star: return (n / 2) * (n - 1);
  }
  return 0;
}

struct SparseEntry {
  std::size_t i, j;
  Gaussian v;
};

std::vector<SparseEntry> sparse(const CMatrix& m) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.push_back({i, j, m(i, j)});
  return out;
}

CMatrix commutator(const std::vector<SparseEntry>& a, const std::vector<SparseEntry>& b, std::size_t n) {
  CMatrix c(n, n);
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.j == y.i) c(x.i, y.j) += x.v * y.v;
      if (y.j == x.i) c(y.i, x.j) -= y.v * x.v;
    }
  return c;
}

void require(const std::string& failure, const std::string& what) {
  if (!failure.empty()) throw std::logic_error(what + ": " + failure);
}

}  // namespace

std::string family_key(Family f) {
  switch (f) {
    case Family::su_pq: return "su_pq";
    case Family::sp_2n_R: return "sp_2n_R";
    case Family::so_2n_star: return "so_2n_star";
    case Family::so_p_q: return "so_p_q";
  }
  return "?";
}

Family parse_family(const std::string& key) {
  for (Family f : {Family::su_pq, Family::sp_2n_R, Family::so_2n_star, Family::so_p_q})
    if (family_key(f) == key) return f;
  throw std::invalid_argument("unknown family '" + key + "'");
}

void RealFormSpec::validate() const {
  const bool two = family == Family::su_pq || family == Family::so_p_q;
  if (params.size() != (two ? 2u : 1u))
    throw std::invalid_argument(family_key(family) + ": expected " + (two ? "2" : "1") + " parameter(s)");
  for (int v : params)
    if (v < 1) throw std::invalid_argument(family_key(family) + ": parameters must be positive");
  const std::size_t n = two ? static_cast<std::size_t>(params[0] + params[1]) : 2 * static_cast<std::size_t>(params[0]);
  if (n > kMaxMatrixSize) throw std::invalid_argument(name() + ": matrix size above the supported bound 10");
  if (family == Family::so_p_q && n < 3) throw std::invalid_argument("so(p,q) needs p + q >= 3");
  if (family == Family::so_2n_star && params[0] < 2) throw std::invalid_argument("so*(2n) needs n >= 2");
}

std::size_t RealFormSpec::matrix_size() const {
  if (family == Family::su_pq || family == Family::so_p_q) return static_cast<std::size_t>(params.at(0) + params.at(1));
  return 2 * static_cast<std::size_t>(params.at(0));
}

std::string RealFormSpec::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::su_pq: os << "su(" << params.at(0) << "," << params.at(1) << ")"; break;
    case Family::sp_2n_R: os << "sp(" << 2 * params.at(0) << ",R)"; break;
    case Family::so_p_q: os << "so(" << params.at(0) << "," << params.at(1) << ")"; break;
    case Family::so_2n_star: os << "so*(" << 2 * params.at(0) << ")"; break;
  }
  return os.str();
}

RealForm::RealForm(RealFormSpec spec, std::vector<CMatrix> basis_matrices, std::size_t a_dim, std::size_t p_dim)
    : spec_(std::move(spec)), matrices_(std::move(basis_matrices)), a_dim_(a_dim), p_dim_(p_dim) {
  if (matrices_.empty()) throw std::invalid_argument("RealForm: empty basis");
  n_ = matrices_.front().rows();
  std::vector<QVec> flat;
  for (const auto& m : matrices_) flat.push_back(flatten(m));
  map_ = CoordinateMap<Rational>(flat);

  const std::size_t d = matrices_.size();
  std::vector<std::vector<SparseEntry>> sp;
  for (const auto& m : matrices_) sp.push_back(sparse(m));
  std::vector<Rational> c(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const CMatrix br = commutator(sp[i], sp[j], n_);
      if (br.is_zero()) continue;
      auto x = try_coords(br);
      if (!x) throw std::logic_error(spec_.name() + ": bracket leaves the realization");
      for (std::size_t k = 0; k < d; ++k) {
        c[(i * d + j) * d + k] = (*x)[k];
        c[(j * d + i) * d + k] = -(*x)[k];
      }
    }
  QMatrix theta(d, d);
  for (std::size_t i = 0; i < d; ++i) theta(i, i) = i < p_dim_ ? -1 : 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back((i < p_dim_ ? "p:" : "k:") + describe(matrices_[i]));
  algebra_ = std::make_shared<const LieAlgebra>(std::move(labels), std::move(c), std::move(theta));
}

CMatrix RealForm::matrix(const QVec& x) const {
  if (x.size() != dim()) throw std::invalid_argument("RealForm::matrix: wrong coordinate length");
  CMatrix m(n_, n_);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (sgn(x[k]) == 0) continue;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!matrices_[k](i, j).is_zero()) m(i, j) += matrices_[k](i, j) * Gaussian(x[k]);
  }
  return m;
}

std::optional<QVec> RealForm::try_coords(const CMatrix& m) const { return map_.try_coords(flatten(m)); }

QVec RealForm::coords(const CMatrix& m) const {
  auto x = try_coords(m);
  if (!x) throw std::domain_error(spec_.name() + ": matrix is not in the algebra");
  return *x;
}

RealForm build_real_form(const RealFormSpec& spec) {
  spec.validate();
  const std::size_t n = spec.matrix_size();
  const std::vector<CMatrix> solutions = solve_constraints(n, defining_constraints(spec));
  if (solutions.size() != expected_dim(spec))
    throw std::logic_error(spec.name() + ": realization has unexpected dimension");

  // Cartan-adapted basis: a first, then the rest of p, then k.
  const std::vector<CMatrix> a = standard_a(spec);
  std::vector<QVec> p_flat, k_flat;
  for (const auto& h : a) p_flat.push_back(flatten(h));
  for (const auto& x : solutions) {
    const CMatrix xs = adjoint(x);
    p_flat.push_back(flatten((x + xs) * Gaussian(Rational(1, 2))));
    k_flat.push_back(flatten((x - xs) * Gaussian(Rational(1, 2))));
  }
  const auto nonzero = [](std::vector<QVec> vs) {
    vs.erase(std::remove_if(vs.begin(), vs.end(), [](const QVec& v) { return is_zero_vec(v); }), vs.end());
    return independent_subset(vs);
  };
  p_flat = nonzero(std::move(p_flat));
  k_flat = nonzero(std::move(k_flat));
  if (p_flat.size() + k_flat.size() != solutions.size())
    throw std::logic_error(spec.name() + ": realization is not stable under X -> X*");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (p_flat[i] != flatten(a[i])) throw std::logic_error(spec.name() + ": standard a is not independent");

  std::vector<CMatrix> basis;
  for (const auto& v : p_flat) basis.push_back(unflatten(v, n));
  for (const auto& v : k_flat) basis.push_back(unflatten(v, n));
  RealForm rf(spec, std::move(basis), a.size(), p_flat.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!rf.try_coords(a[i])) throw std::logic_error(spec.name() + ": standard a outside the algebra");

  const LieAlgebra& g = rf.algebra();
  require(g.check_antisymmetry(), spec.name());
  require(g.check_jacobi(), spec.name());
  require(g.check_involution(), spec.name());
  require(g.check_killing_invariance(), spec.name());
  return rf;
}

CartanDecomposition cartan_decomposition(const AlgebraPtr& g) {
  if (!g->has_involution()) throw std::invalid_argument("cartan_decomposition: no involution");
  require(g->check_involution(), "cartan_decomposition");
  const std::size_t d = g->dim();
  const QMatrix id = QMatrix::identity(d);
  CartanDecomposition cd{Subspace(g, kernel(g->theta() - id)), Subspace(g, kernel(g->theta() + id))};
  if (cd.k.dim() + cd.p.dim() != d) throw std::logic_error("cartan_decomposition: theta is not diagonalizable");
  if (!brackets_into(cd.k, cd.k, cd.k) || !brackets_into(cd.k, cd.p, cd.p) || !brackets_into(cd.p, cd.p, cd.k))
    throw std::logic_error("cartan_decomposition: bracket relations fail");
  return cd;
}

Subspace maximal_abelian_in_p(const RealForm& rf) {
  const AlgebraPtr& g = rf.algebra_ptr();
  std::vector<QVec> basis;
  for (std::size_t i = 0; i < rf.a_dim(); ++i) basis.push_back(g->basis_vector(i));
  Subspace a(g, basis);
  const CartanDecomposition cd = cartan_decomposition(g);
  if (!cd.p.contains_subspace(a)) throw std::logic_error("maximal_abelian_in_p: a is not inside p");
  if (!is_abelian(a)) throw std::logic_error("maximal_abelian_in_p: a is not abelian");
  if (centralizer(a.basis(), cd.p).dim() != a.dim()) throw std::logic_error("maximal_abelian_in_p: a is not maximal");
  return a;
}

int lex_compare(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

bool lex_positive(const QVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return sgn(x) > 0;
  return false;
}

std::optional<std::size_t> RestrictedRootDatum::find(const QVec& coords) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].coords == coords) return i;
  return std::nullopt;
}

const RestrictedRoot& RestrictedRootDatum::root(const QVec& coords) const {
  auto i = find(coords);
  if (!i) throw std::out_of_range("not a restricted root");
  return roots[*i];
}

RestrictedRootDatum restricted_roots(const AlgebraPtr& g, const Subspace& a) {
  const std::size_t r = a.dim();
  const std::size_t d = g->dim();
  std::vector<QMatrix> ads;
  for (const auto& h : a.basis()) ads.push_back(g->ad(h));

  for (long base : {5L, 7L, 11L, 13L}) {
    // Generic H = sum base^(r-1-m) H_m separates roots whose coordinates are
    // small integers.
    QMatrix adh(d, d);
    long w = 1;
    for (std::size_t m = r; m-- > 0;) {
      adh += ads[m] * Rational(w);
      w *= base;
    }
    RestrictedRootDatum out;
    out.g = g;
    out.a = a;
    std::size_t total = 0;
    bool separated = true;
    for (const auto& [mu, mult] : rational_eigenvalues(adh)) {
      QMatrix shifted = adh;
      for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= mu;
      std::vector<QVec> space = kernel(shifted);
      total += space.size();
      if (sgn(mu) == 0) continue;
      // Read off beta(H_m) and confirm every ad(H_m) is scalar on the space.
      QVec coords(r);
      const QVec& v = space.front();
      std::size_t pivot = 0;
      while (sgn(v[pivot]) == 0) ++pivot;
      for (std::size_t m = 0; m < r && separated; ++m) {
        coords[m] = (ads[m] * v)[pivot] / v[pivot];
        for (const auto& u : space)
          if (ads[m] * u != scale(u, coords[m])) separated = false;
      }
      if (!separated) break;
      out.roots.push_back({coords, Subspace(g, std::move(space))});
    }
    if (!separated) continue;
    if (total != d) throw std::logic_error("restricted_roots: ad(a) is not diagonalizable over Q");
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RestrictedRoot& x, const RestrictedRoot& y) { return lex_compare(x.coords, y.coords) > 0; });
    for (std::size_t i = 0; i < out.roots.size(); ++i)
      if (lex_positive(out.roots[i].coords)) out.positive.push_back(i);
    out.m = centralizer(a.basis(), cartan_decomposition(g).k);
    const Subspace g0 = centralizer(a.basis(), whole(g));
    if (g0.dim() != out.m.dim() + r) throw std::logic_error("restricted_roots: centralizer of a is not m + a");
    return out;
  }
  throw std::logic_error("restricted_roots: could not separate the root spaces");
}

Subspace iwasawa_n(const RestrictedRootDatum& d) {
  std::vector<QVec> vs;
  for (std::size_t i : d.positive)
    for (const auto& v : d.roots[i].space.basis()) vs.push_back(v);
  Subspace n = span(d.g, vs);
  if (!is_subalgebra(n) || !is_nilpotent(n)) throw std::logic_error("iwasawa_n: n is not a nilpotent subalgebra");
  const Subspace an = sum(d.a, n);
  if (!is_subalgebra(an) || !is_solvable(an)) throw std::logic_error("iwasawa_n: a + n is not a solvable subalgebra");
  return n;
}

}  // namespace orbitlab
