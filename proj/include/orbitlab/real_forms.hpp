// Classical real forms from explicit matrix realizations, Cartan decomposition,
// restricted roots and Iwasawa data.
#pragma once

#include "orbitlab/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

enum class Family { su_pq, sp_2n_R, so_2n_star, so_p_q };

struct RealFormSpec {
  Family family = Family::sp_2n_R;
  std::vector<int> params;  // (p, q) or (n)

  static RealFormSpec su(int p, int q) { return {Family::su_pq, {p, q}}; }
  static RealFormSpec sp(int n) { return {Family::sp_2n_R, {n}}; }
  static RealFormSpec so(int p, int q) { return {Family::so_p_q, {p, q}}; }
  static RealFormSpec so_star(int n) { return {Family::so_2n_star, {n}}; }

  /// Throws std::invalid_argument when the family/parameters are unsupported.
  void validate() const;
  std::size_t matrix_size() const;
  std::string name() const;  // e.g. "sp(4,R)"
};

std::string family_key(Family f);               // "sp_2n_R", ...
Family parse_family(const std::string& key);    // throws std::invalid_argument

/// A real form together with the matrices of its basis.  Basis order: the
/// standard a first, then the rest of p, then k.
class RealForm {
 public:
  RealForm(RealFormSpec spec, std::vector<CMatrix> basis_matrices, std::size_t a_dim, std::size_t p_dim);

  const RealFormSpec& spec() const { return spec_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const LieAlgebra& algebra() const { return *algebra_; }
  std::size_t dim() const { return matrices_.size(); }
  std::size_t matrix_size() const { return n_; }
  std::size_t a_dim() const { return a_dim_; }
  std::size_t p_dim() const { return p_dim_; }
  const std::vector<CMatrix>& basis_matrices() const { return matrices_; }

  CMatrix matrix(const QVec& x) const;
  /// Coordinates of a matrix of the algebra; throws std::domain_error otherwise.
  QVec coords(const CMatrix& m) const;
  std::optional<QVec> try_coords(const CMatrix& m) const;

 private:
  RealFormSpec spec_;
  std::vector<CMatrix> matrices_;
  std::size_t n_ = 0;
  std::size_t a_dim_ = 0;
  std::size_t p_dim_ = 0;
  CoordinateMap<Rational> map_;
  AlgebraPtr algebra_;
};

/// Builds the real form; Jacobi, antisymmetry, theta and Killing invariance are
/// checked before returning (std::logic_error on failure).
RealForm build_real_form(const RealFormSpec& spec);

struct CartanDecomposition {
  Subspace k;
  Subspace p;
};
/// +1 / -1 eigenspaces of theta with the bracket relations verified.
CartanDecomposition cartan_decomposition(const AlgebraPtr& g);

/// The standard a of the realization, checked abelian and maximal in p.
Subspace maximal_abelian_in_p(const RealForm& rf);

struct RestrictedRoot {
  QVec coords;        // beta(H_m) over the a basis
  Subspace space;     // g_beta
  std::size_t multiplicity() const { return space.dim(); }
};

/// Lexicographic order on a-coordinates: first nonzero coordinate decides.
int lex_compare(const QVec& a, const QVec& b);
bool lex_positive(const QVec& v);

struct RestrictedRootDatum {
  AlgebraPtr g;
  Subspace a;
  Subspace m;                          // centralizer of a in k
  std::vector<RestrictedRoot> roots;   // sorted lexicographically, decreasing
  std::vector<std::size_t> positive;   // indices into roots, decreasing order

  std::optional<std::size_t> find(const QVec& coords) const;
  bool is_root(const QVec& coords) const { return find(coords).has_value(); }
  const RestrictedRoot& root(const QVec& coords) const;
  const RestrictedRoot& highest() const { return roots.at(positive.front()); }
  /// a-coordinates of the element H of a with coordinates h.
  QVec a_element(const QVec& h) const { return a.combine(h); }
};

/// Simultaneous eigenspace decomposition of ad(a).  Throws std::logic_error
/// when ad(a) is not diagonalizable over Q.
RestrictedRootDatum restricted_roots(const AlgebraPtr& g, const Subspace& a);

/// n = sum of the positive root spaces; checked nilpotent with a + n solvable.
Subspace iwasawa_n(const RestrictedRootDatum& d);

}  // namespace orbitlab
