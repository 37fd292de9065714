// Roots of the complexification with respect to a compact Cartan t.
//
// A root alpha is stored through the rational vector a with
// alpha(T_m) = i a_m on the basis T_m of t.  Weights use the same encoding,
// and (mu, nu) = mu^T G^{-1} nu with G_mn = -K(T_m, T_n).
#pragma once

#include "orbitlab/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace orbitlab {

struct ComplexRoot {
  QVec a;
  CVec vector;   // root vector in coordinates of g (complexified)
  bool compact = false;
};

class InnerProductOnT {
 public:
  explicit InnerProductOnT(const Subspace& t);
  InnerProductOnT(QMatrix gram);

  const QMatrix& gram() const { return gram_; }
  const QMatrix& gram_inverse() const { return inv_; }
  InnerProductOnT scaled(const Rational& c) const { return InnerProductOnT(gram_ * c); }

  /// (mu, nu) on weights.
  Rational product(const QVec& mu, const QVec& nu) const { return dot(mu, inv_ * nu); }
  /// t-coordinates of the element X with <X, .> = mu on t.
  QVec element_of(const QVec& mu) const { return inv_ * mu; }
  /// Weight of the element with t-coordinates x.
  QVec weight_of(const QVec& x) const { return gram_ * x; }

 private:
  QMatrix gram_;
  QMatrix inv_;
};

struct ComplexRootDatum {
  AlgebraPtr g;
  Subspace t;
  std::vector<ComplexRoot> roots;          // decreasing lexicographic order of a
  QVec regular_element;                    // t-coordinates; fixes the compact positive roots
  std::vector<std::size_t> delta_c_plus;   // compact roots positive on regular_element
  std::vector<std::size_t> delta_n_plus;   // chosen holomorphic system (may be empty)

  std::optional<std::size_t> find(const QVec& a) const;
  std::vector<std::size_t> compact() const;
  std::vector<std::size_t> noncompact() const;
};

/// Simultaneous eigenspaces of ad(t) over Q(i).  Throws std::logic_error when a
/// root space is not one-dimensional or an eigenvalue is not in iQ.
ComplexRootDatum root_decomposition(const AlgebraPtr& g, const Subspace& t);

/// The t-coordinates of a nonzero element of the centre of k inside t, if the
/// centre is nontrivial and separates the noncompact roots.
std::optional<QVec> central_element(const ComplexRootDatum& d);

/// The holomorphic system (p+ or p-) containing root `anchor`, or nullopt when
/// the centre of k is trivial.
std::optional<std::vector<std::size_t>> holomorphic_system_containing(const ComplexRootDatum& d, std::size_t anchor);

/// Reflection s_alpha on weight coordinates.
QMatrix reflection(const QVec& alpha, const InnerProductOnT& ip);

/// Compact Weyl group generated by the compact reflections; throws if the
/// closure exceeds `bound` elements.
std::vector<QMatrix> weyl_group_K(const ComplexRootDatum& d, const InnerProductOnT& ip, std::size_t bound = 10000);

/// Unique Z0 in the centre of k with alpha(Z0) = -i on delta_n_plus (t-coords).
QVec z0_element(const ComplexRootDatum& d);

struct RhoVectors {
  QVec rho_G, rho_K, rho_n;
};
RhoVectors rho_vectors(const ComplexRootDatum& d);
/// Half sums over explicit index sets.
RhoVectors rho_vectors(const ComplexRootDatum& d, const std::vector<std::size_t>& compact_positive,
                       const std::vector<std::size_t>& noncompact_positive);

struct PositiveSystem {
  std::vector<std::size_t> compact;
  std::vector<std::size_t> noncompact;
};
/// {alpha : (lambda, alpha) > 0}; throws std::invalid_argument if lambda is singular.
PositiveSystem positive_system_of(const ComplexRootDatum& d, const InnerProductOnT& ip, const QVec& lambda);

/// True iff the set of noncompact roots is closed under W_K.
bool wk_stable(const ComplexRootDatum& d, const std::vector<QMatrix>& wk, const std::vector<std::size_t>& noncompact);
/// True iff the span of the root vectors is a subalgebra of g_C.
bool bracket_closed(const ComplexRootDatum& d, const std::vector<std::size_t>& noncompact);

}  // namespace orbitlab
