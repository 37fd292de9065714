#include "orbitlab/group.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace orbitlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational pow_int(const Rational& base, const Rational& e) {
  if (e.get_den() != 1) throw std::domain_error("TorusScale: non-integral root coordinate");
  const long n = e.get_num().get_si();
  Rational out = 1;
  for (long i = 0; i < std::labs(n); ++i) out *= base;
  return n < 0 ? Rational(1 / out) : out;
}

using DMatrix = std::vector<std::vector<double>>;

DMatrix to_double(const QMatrix& m) {
  DMatrix out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_d();
  return out;
}

DMatrix multiply(const DMatrix& a, const DMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.front().size();
  DMatrix c(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

/// exp(A) by scaling and squaring with a Taylor core.
DMatrix expm(DMatrix a) {
  const std::size_t n = a.size();
  double norm = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double v : row) s += std::fabs(v);
    norm = std::max(norm, s);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& row : a)
    for (double& v : row) v *= scale;
  DMatrix result(n, std::vector<double>(n, 0.0)), term = result;
  for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1.0;
  for (int k = 1; k <= 18; ++k) {
    term = multiply(term, a);
    for (auto& row : term)
      for (double& v : row) v /= k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

}  // namespace

bool GroupWord::exact() const {
  for (const auto& l : letters)
    if (std::holds_alternative<FloatExp>(l)) return false;
  return true;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

GroupActions::GroupActions(std::shared_ptr<const Structure> s) : s_(std::move(s)) {
  const RealForm& rf = *s_->form;
  const LieAlgebra& g = rf.algebra();
  const std::size_t n = rf.matrix_size();
  for (std::size_t i = rf.p_dim(); i < rf.dim(); ++i) {
    const CMatrix& z = rf.basis_matrices()[i];
    const CMatrix z2 = z * z;
    const CMatrix z3 = z2 * z;
    // Find c with Z^3 = -c Z.
    std::optional<Rational> c;
    for (std::size_t a = 0; a < n && !c; ++a)
      for (std::size_t b = 0; b < n && !c; ++b)
        if (!z(a, b).is_zero()) {
          const Gaussian ratio = z3(a, b) / z(a, b);
          if (ratio.is_real()) c = -ratio.re;
        }
    if (!c || sgn(*c) <= 0 || !(z3 == z * Gaussian(-*c))) continue;
    if (!mpz_perfect_square_p(c->get_num_mpz_t()) || !mpz_perfect_square_p(c->get_den_mpz_t())) continue;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), c->get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), c->get_den_mpz_t());
    Rational inv_root(den, num);
    inv_root.canonicalize();
    const CMatrix w = z * Gaussian(inv_root);
    generators_.push_back(i);
    w2_.push_back(w * w);
    w_.push_back(w);
  }
  if (generators_.empty()) throw std::logic_error("GroupActions: no rotation generators in k");

  // Root decomposition of g for the torus letters.
  const RestrictedRootDatum& d = s_->restricted();
  const Subspace g0 = centralizer(d.a.basis(), whole(s_->g()));
  std::vector<QVec> cols;
  for (const auto& v : g0.basis()) {
    cols.push_back(v);
    torus_weight_.push_back(QVec(d.a.dim(), Rational(0)));
  }
  for (const auto& root : d.roots)
    for (const auto& v : root.space.basis()) {
      cols.push_back(v);
      torus_weight_.push_back(root.coords);
    }
  torus_basis_ = QMatrix::from_columns(cols, g.dim());
  torus_basis_inv_ = inverse(torus_basis_);
  n_ = s_->cascade.n;
  std::vector<QVec> tn;
  for (const auto& v : n_.basis()) tn.push_back(g.apply_theta(v));
  theta_n_ = Subspace(s_->g(), tn);
}

QMatrix GroupActions::ad_matrix(const Letter& l, bool inverse) const {
  const RealForm& rf = *s_->form;
  const LieAlgebra& g = rf.algebra();
  const std::size_t d = g.dim();
  return std::visit(
      overloaded{
          [&](const NilpotentExp& e) {
            QMatrix ad = g.ad(e.x);
            if (inverse) ad *= Rational(-1);
            QMatrix result = QMatrix::identity(d), term = QMatrix::identity(d);
            for (std::size_t k = 1;; ++k) {
              term = term * ad;
              if (term.is_zero()) break;
              if (k > d) throw std::invalid_argument("NilpotentExp: ad X is not nilpotent");
              term *= Rational(1, static_cast<long>(k));
              result += term;
            }
            return result;
          },
          [&](const TorusScale& t) {
            if (t.t.size() != s_->restricted().a.dim()) throw std::invalid_argument("TorusScale: wrong length");
            QMatrix diag(d, d);
            for (std::size_t c = 0; c < d; ++c) {
              Rational f = 1;
              for (std::size_t m = 0; m < t.t.size(); ++m) {
                if (sgn(t.t[m]) <= 0) throw std::invalid_argument("TorusScale: entries must be positive");
                f *= pow_int(t.t[m], torus_weight_[c][m]);
              }
              diag(c, c) = inverse ? Rational(1 / f) : f;
            }
            return QMatrix(torus_basis_ * diag * torus_basis_inv_);
          },
          [&](const PythagoreanRotation& r) {
            if (r.cos * r.cos + r.sin * r.sin != 1) throw std::invalid_argument("PythagoreanRotation: cos^2 + sin^2 != 1");
            const auto it = std::find(generators_.begin(), generators_.end(), r.generator);
            if (it == generators_.end()) throw std::invalid_argument("PythagoreanRotation: unusable generator");
            const std::size_t k = static_cast<std::size_t>(it - generators_.begin());
            const std::size_t n = rf.matrix_size();
            const Gaussian s(inverse ? Rational(-r.sin) : r.sin);
            const Gaussian oc(Rational(1 - r.cos));
            const CMatrix id = CMatrix::identity(n);
            const CMatrix gm = id + w_[k] * s + w2_[k] * oc;
            const CMatrix gi = id - w_[k] * s + w2_[k] * oc;
            QMatrix ad(d, d);
            for (std::size_t j = 0; j < d; ++j) {
              const QVec col = rf.coords(gm * rf.basis_matrices()[j] * gi);
              for (std::size_t i = 0; i < d; ++i) ad(i, j) = col[i];
            }
            return ad;
          },
          [&](const FloatExp&) -> QMatrix { throw std::invalid_argument("FloatExp has no exact adjoint matrix"); },
      },
      l);
}

QVec GroupActions::adjoint(const GroupWord& w, const QVec& x) const {
  QVec out = x;
  for (std::size_t i = w.letters.size(); i-- > 0;) out = ad_matrix(w.letters[i]) * out;
  return out;
}

QVec GroupActions::coadjoint(const GroupWord& w, const QVec& f) const {
  QVec out = f;
  for (std::size_t i = w.letters.size(); i-- > 0;) out = left_multiply(out, ad_matrix(w.letters[i], true));
  return out;
}

std::vector<double> GroupActions::coadjoint_float(const GroupWord& w, const std::vector<double>& f) const {
  std::vector<double> out = f;
  const LieAlgebra& g = s_->form->algebra();
  for (std::size_t i = w.letters.size(); i-- > 0;) {
    DMatrix m;
    if (const auto* e = std::get_if<FloatExp>(&w.letters[i])) {
      m = to_double(g.ad(e->x));
      for (auto& row : m)
        for (double& v : row) v *= -e->time;
      m = expm(std::move(m));
    } else {
      m = to_double(ad_matrix(w.letters[i], true));
    }
    std::vector<double> next(m.front().size(), 0.0);
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < next.size(); ++c) next[c] += out[r] * m[r][c];
    out = std::move(next);
  }
  return out;
}

GroupWord GroupActions::theta(const GroupWord& w) const {
  const LieAlgebra& g = s_->form->algebra();
  GroupWord out;
  for (const auto& l : w.letters)
    out.letters.push_back(std::visit(
        overloaded{
            [&](const NilpotentExp& e) -> Letter { return NilpotentExp{g.apply_theta(e.x)}; },
            [&](const TorusScale& t) -> Letter {
              QVec inv;
              for (const auto& v : t.t) inv.push_back(1 / v);
              return TorusScale{inv};
            },
            [&](const PythagoreanRotation& r) -> Letter { return r; },
            [&](const FloatExp& e) -> Letter { return FloatExp{g.apply_theta(e.x), e.time}; },
        },
        l));
  return out;
}

PythagoreanRotation GroupActions::random_rotation(std::mt19937_64& rng) const {
  PythagoreanRotation r;
  r.generator = generators_[rng() % generators_.size()];
  const int m = uniform_int(rng, 2, 5);
  const int n = uniform_int(rng, 1, m - 1);
  const Rational h(m * m + n * n);
  r.cos = Rational(m * m - n * n) / h;
  r.sin = Rational(2 * m * n) / h;
  if (rng() & 1) std::swap(r.cos, r.sin);
  if (rng() & 1) r.cos = -r.cos;
  if (rng() & 1) r.sin = -r.sin;
  return r;
}

TorusScale GroupActions::random_torus(std::mt19937_64& rng) const {
  static const Rational choices[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1),
                                     Rational(3, 2), Rational(2),    Rational(3)};
  TorusScale t;
  for (std::size_t m = 0; m < s_->restricted().a.dim(); ++m) t.t.push_back(choices[rng() % 7]);
  return t;
}

QVec GroupActions::random_in(std::mt19937_64& rng, const Subspace& s, int range) const {
  QVec c(s.dim());
  for (auto& v : c) v = uniform_int(rng, -range, range);
  return s.dim() == 0 ? QVec(s_->form->dim(), Rational(0)) : s.combine(c);
}

NilpotentExp GroupActions::random_nilpotent(std::mt19937_64& rng, bool positive, int range) const {
  return NilpotentExp{random_in(rng, positive ? n_ : theta_n_, range)};
}

GroupWord GroupActions::random_k_word(std::mt19937_64& rng, std::size_t rotations) const {
  GroupWord w;
  for (std::size_t i = 0; i < rotations; ++i) w.letters.emplace_back(random_rotation(rng));
  return w;
}

GroupWord GroupActions::random_an_word(std::mt19937_64& rng, std::size_t length) const {
  GroupWord w;
  for (std::size_t i = 0; i < length; ++i) {
    if (i % 2 == 0)
      w.letters.emplace_back(random_torus(rng));
    else
      w.letters.emplace_back(random_nilpotent(rng));
  }
  return w;
}

GroupWord GroupActions::random_g_word(std::mt19937_64& rng, std::size_t rotations, std::size_t an_length) const {
  GroupWord w = random_an_word(rng, an_length);
  const GroupWord k = random_k_word(rng, rotations);
  w.letters.insert(w.letters.end(), k.letters.begin(), k.letters.end());
  return w;
}

}  // namespace orbitlab
