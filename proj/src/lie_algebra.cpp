#include "orbitlab/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitlab {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Rational> constants, QMatrix theta)
    : labels_(std::move(labels)), constants_(std::move(constants)), theta_(std::move(theta)) {
  const std::size_t d = dim();
  if (constants_.size() != d * d * d) throw std::invalid_argument("LieAlgebra: structure constant table has wrong size");
  if (theta_.rows() != 0 && (theta_.rows() != d || theta_.cols() != d))
    throw std::invalid_argument("LieAlgebra: involution has wrong shape");
  sparse_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = constant(i, j, k);
        if (sgn(c) != 0) sparse_[i * d + j].push_back({k, c});
      }
  ad_basis_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    QMatrix a(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : bracket_terms(i, j)) a(t.k, j) = t.c;
    ad_basis_.push_back(std::move(a));
  }
  killing_ = QMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational tr = 0;
      // tr(ad e_i ad e_j) = sum_{l,k} c[i][l][k] c[j][k][l]
      for (std::size_t l = 0; l < d; ++l)
        for (const auto& t : bracket_terms(i, l)) {
          const Rational& c2 = constant(j, t.k, l);
          if (sgn(c2) != 0) tr += t.c * c2;
        }
      killing_(i, j) = tr;
      killing_(j, i) = tr;
    }
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  const std::size_t d = dim();
  QVec out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& t : bracket_terms(i, j)) out[t.k] += xy * t.c;
    }
  }
  return out;
}

CVec LieAlgebra::bracket(const CVec& x, const CVec& y) const {
  const std::size_t d = dim();
  CVec out(d, Gaussian(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Gaussian xy = x[i] * y[j];
      for (const auto& t : bracket_terms(i, j)) out[t.k] += xy * Gaussian(t.c);
    }
  }
  return out;
}

QMatrix LieAlgebra::ad(const QVec& x) const {
  const std::size_t d = dim();
  QMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : bracket_terms(i, j)) a(t.k, j) += x[i] * t.c;
  }
  return a;
}

Rational LieAlgebra::killing(const QVec& x, const QVec& y) const { return dot(x, killing_ * y); }

std::string LieAlgebra::check_antisymmetry() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (constant(i, j, k) != -constant(j, i, k)) {
          std::ostringstream os;
          os << "antisymmetry fails at (" << i << "," << j << "," << k << ")";
          return os.str();
        }
  return {};
}

std::string LieAlgebra::check_jacobi() const {
  // With antisymmetry in place the Jacobiator is alternating, so i < j < k
  // covers every basis triple.
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const QVec ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        QVec s = bracket(ei, bracket(ej, ek));
        s = add(std::move(s), bracket(ej, bracket(ek, ei)));
        s = add(std::move(s), bracket(ek, bracket(ei, ej)));
        if (!is_zero_vec(s)) {
          std::ostringstream os;
          os << "Jacobi identity fails at (" << i << "," << j << "," << k << ")";
          return os.str();
        }
      }
  return {};
}

std::string LieAlgebra::check_involution() const {
  if (!has_involution()) return "no involution present";
  const std::size_t d = dim();
  if (!(theta_ * theta_ == QMatrix::identity(d))) return "theta^2 != 1";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const QVec lhs = apply_theta(bracket(basis_vector(i), basis_vector(j)));
      const QVec rhs = bracket(theta_.col(i), theta_.col(j));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "theta is not an automorphism at (" << i << "," << j << ")";
        return os.str();
      }
    }
  return {};
}

std::string LieAlgebra::check_killing_invariance() const {
  for (std::size_t k = 0; k < dim(); ++k) {
    const QMatrix& a = ad_basis_[k];
    if (!(a.transpose() * killing_ + killing_ * a).is_zero()) {
      std::ostringstream os;
      os << "Killing form not ad(e_" << k << ")-invariant";
      return os.str();
    }
  }
  return {};
}

Subspace::Subspace(AlgebraPtr ambient, std::vector<QVec> basis)
    : ambient_(std::move(ambient)), map_(std::move(basis)) {
  for (const auto& v : map_.basis())
    if (v.size() != ambient_->dim()) throw std::invalid_argument("Subspace: basis vector of wrong length");
}

bool Subspace::contains(const QVec& v) const {
  if (dim() == 0) return is_zero_vec(v);
  return map_.contains(v);
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

Subspace span(const AlgebraPtr& g, const std::vector<QVec>& vectors) {
  std::vector<QVec> nonzero;
  for (const auto& v : vectors)
    if (!is_zero_vec(v)) nonzero.push_back(v);
  return Subspace(g, independent_subset(nonzero));
}

Subspace whole(const AlgebraPtr& g) {
  std::vector<QVec> b;
  for (std::size_t i = 0; i < g->dim(); ++i) b.push_back(g->basis_vector(i));
  return Subspace(g, std::move(b));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<QVec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return span(a.ambient_ptr(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  return Subspace(a.ambient_ptr(), intersect(a.basis(), b.basis()));
}

bool brackets_into(const Subspace& a, const Subspace& b, const Subspace& target) {
  const LieAlgebra& g = a.ambient();
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (!target.contains(g.bracket(x, y))) return false;
  return true;
}

bool is_subalgebra(const Subspace& s) { return brackets_into(s, s, s); }

bool is_ideal(const Subspace& s, const Subspace& parent) {
  return parent.contains_subspace(s) && brackets_into(parent, s, s);
}

bool is_ideal(const Subspace& s) { return is_ideal(s, whole(s.ambient_ptr())); }

bool is_abelian(const Subspace& s) {
  const LieAlgebra& g = s.ambient();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!is_zero_vec(g.bracket(s.basis()[i], s.basis()[j]))) return false;
  return true;
}

namespace {

Subspace bracket_span(const Subspace& a, const Subspace& b) {
  const LieAlgebra& g = a.ambient();
  std::vector<QVec> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) vs.push_back(g.bracket(x, y));
  return span(a.ambient_ptr(), vs);
}

}  // namespace

bool is_nilpotent(const Subspace& s) {
  Subspace c = s;
  for (std::size_t step = 0; step <= s.dim() + 1; ++step) {
    if (c.dim() == 0) return true;
    Subspace next = bracket_span(s, c);
    if (next.dim() == c.dim()) return false;
    c = std::move(next);
  }
  return c.dim() == 0;
}

bool is_solvable(const Subspace& s) {
  Subspace c = s;
  for (std::size_t step = 0; step <= s.dim() + 1; ++step) {
    if (c.dim() == 0) return true;
    Subspace next = bracket_span(c, c);
    if (next.dim() == c.dim()) return false;
    c = std::move(next);
  }
  return c.dim() == 0;
}

QMatrix killing_gram(const Subspace& s) {
  const LieAlgebra& g = s.ambient();
  const std::size_t n = s.dim();
  QMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram(i, j) = g.killing(s.basis()[i], s.basis()[j]);
      gram(j, i) = gram(i, j);
    }
  return gram;
}

bool is_compact_subalgebra(const Subspace& s) {
  if (!is_subalgebra(s)) throw std::invalid_argument("is_compact_subalgebra: subspace is not closed under the bracket");
  return is_negative_definite(killing_gram(s));
}

Subspace centralizer(const std::vector<QVec>& with, const Subspace& within) {
  const LieAlgebra& g = within.ambient();
  const std::size_t n = within.dim();
  if (with.empty() || n == 0) return within;
  // Rows: components of [x, w] for every w; unknowns: coordinates of x in `within`.
  QMatrix m(with.size() * g.dim(), n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t w = 0; w < with.size(); ++w) {
      const QVec b = g.bracket(within.basis()[c], with[w]);
      for (std::size_t k = 0; k < g.dim(); ++k) m(w * g.dim() + k, c) = b[k];
    }
  std::vector<QVec> out;
  for (const auto& z : kernel(m)) out.push_back(within.combine(z));
  return Subspace(within.ambient_ptr(), std::move(out));
}

Subspace stabilizer(const AlgebraPtr& g, const Covector& f) {
  const std::size_t d = g->dim();
  // Row j, column k: f([e_k, e_j]).
  QMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) {
      Rational s = 0;
      for (const auto& t : g->bracket_terms(k, j)) s += t.c * f.coords[t.k];
      m(j, k) = s;
    }
  return Subspace(g, kernel(m));
}

Covector killing_dual(const LieAlgebra& g, const QVec& x) {
  QVec c = left_multiply(x, g.killing_matrix());
  for (auto& v : c) v = -v;
  return {std::move(c)};
}

QMatrix inner_gram(const LieAlgebra& g) {
  if (!g.has_involution()) throw std::invalid_argument("inner product needs a Cartan involution");
  QMatrix m = g.killing_matrix() * g.theta();
  m *= Rational(-1);
  return m;
}

Covector inner_dual(const LieAlgebra& g, const QVec& x) { return {left_multiply(x, inner_gram(g))}; }

Rational inner(const LieAlgebra& g, const QVec& x, const QVec& y) {
  return -g.killing(x, g.apply_theta(y));
}

LieAlgebra restrict_to(const Subspace& s, const std::vector<std::string>& labels) {
  const LieAlgebra& g = s.ambient();
  const std::size_t n = s.dim();
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVec b = g.bracket(s.basis()[i], s.basis()[j]);
      if (is_zero_vec(b)) continue;
      const QVec coords = s.coords(b);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = coords[k];
    }
  std::vector<std::string> names = labels;
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return LieAlgebra(std::move(names), std::move(c));
}

}  // namespace orbitlab
