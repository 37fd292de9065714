// Lie algebras as structure-constant tables.
#pragma once

#include "orbitlab/exact.hpp"
#include "orbitlab/linalg.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace orbitlab {

/// [e_i, e_j] = sum_k c[i][j][k] e_k, plus an optional Cartan involution.
class LieAlgebra {
 public:
  struct Term {
    std::size_t k;
    Rational c;
  };

  LieAlgebra() = default;
  /// `constants` is dense, indexed (i*d + j)*d + k.  `theta` may be empty.
  LieAlgebra(std::vector<std::string> labels, std::vector<Rational> constants, QMatrix theta = {});

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Rational>& constants() const { return constants_; }
  /// Nonzero terms of [e_i, e_j].
  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const { return sparse_[i * dim() + j]; }

  bool has_involution() const { return theta_.rows() == dim() && dim() > 0; }
  const QMatrix& theta() const { return theta_; }
  QVec apply_theta(const QVec& x) const { return theta_ * x; }

  QVec bracket(const QVec& x, const QVec& y) const;
  CVec bracket(const CVec& x, const CVec& y) const;
  QVec basis_vector(std::size_t i) const { return unit_vector<Rational>(dim(), i); }

  /// Matrix of ad(x) acting on column coordinate vectors.
  QMatrix ad(const QVec& x) const;
  const QMatrix& ad_basis(std::size_t i) const { return ad_basis_[i]; }

  Rational killing(const QVec& x, const QVec& y) const;
  /// Gram matrix of the Killing form in the basis.
  const QMatrix& killing_matrix() const { return killing_; }

  // Exact structural checks; each returns the first failing index triple as a
  // message, or an empty string.
  std::string check_antisymmetry() const;
  std::string check_jacobi() const;
  std::string check_involution() const;   // theta^2 = 1 and theta an automorphism
  std::string check_killing_invariance() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> constants_;
  std::vector<std::vector<Term>> sparse_;
  std::vector<QMatrix> ad_basis_;
  QMatrix theta_;
  QMatrix killing_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// A linear subspace of a Lie algebra, given by independent coordinate vectors.
class Subspace {
 public:
  Subspace() = default;
  Subspace(AlgebraPtr ambient, std::vector<QVec> basis);

  const LieAlgebra& ambient() const { return *ambient_; }
  const AlgebraPtr& ambient_ptr() const { return ambient_; }
  std::size_t dim() const { return map_.size(); }
  const std::vector<QVec>& basis() const { return map_.basis(); }
  bool contains(const QVec& v) const;
  QVec coords(const QVec& v) const { return map_.coords(v); }
  QVec combine(const QVec& c) const { return map_.combine(c); }
  bool contains_subspace(const Subspace& other) const;

 private:
  AlgebraPtr ambient_;
  CoordinateMap<Rational> map_;
};

Subspace span(const AlgebraPtr& g, const std::vector<QVec>& vectors);  // drops dependent vectors
Subspace whole(const AlgebraPtr& g);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// [a, b] contained in target.
bool brackets_into(const Subspace& a, const Subspace& b, const Subspace& target);
bool is_subalgebra(const Subspace& s);
bool is_ideal(const Subspace& s, const Subspace& parent);
bool is_ideal(const Subspace& s);
bool is_abelian(const Subspace& s);
/// Lower central series reaches zero.
bool is_nilpotent(const Subspace& s);
/// Derived series reaches zero.
bool is_solvable(const Subspace& s);

/// Gram matrix of the ambient Killing form restricted to s.
QMatrix killing_gram(const Subspace& s);
/// Negative definiteness of the Killing form on s.  Throws if s is not a
/// subalgebra.
bool is_compact_subalgebra(const Subspace& s);

/// Elements of `within` commuting with every vector in `with`.
Subspace centralizer(const std::vector<QVec>& with, const Subspace& within);

/// A point of g^* in the dual basis.
struct Covector {
  QVec coords;
  Rational operator()(const QVec& x) const { return dot(coords, x); }
};

/// Lie algebra of the stabiliser of f: { X : f([X, e_j]) = 0 for all j }.
Subspace stabilizer(const AlgebraPtr& g, const Covector& f);

/// The functional Y -> -K(X, Y).  For X in k this equals <X, .> with
/// <X, Y> = -K(X, theta Y).
Covector killing_dual(const LieAlgebra& g, const QVec& x);
/// The functional Y -> <X, Y> = -K(X, theta Y).
Covector inner_dual(const LieAlgebra& g, const QVec& x);
/// <X, Y> = -K(X, theta Y), positive definite for a Cartan involution.
Rational inner(const LieAlgebra& g, const QVec& x, const QVec& y);
/// Gram matrix of <.,.> in the basis.
QMatrix inner_gram(const LieAlgebra& g);

/// Sub-algebra as a Lie algebra in its own right (structure constants in the
/// given basis).  Throws if the span is not closed under brackets.
LieAlgebra restrict_to(const Subspace& s, const std::vector<std::string>& labels = {});

}  // namespace orbitlab
