// Strongly orthogonal cascade, graded pieces of a + n, canonical orbit
// representatives and the compact Cartan built from the cascade.
#pragma once

#include "orbitlab/real_forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

/// a + n as a Lie algebra in its own right, in a basis adapted to the root
/// decomposition: the a basis first, then the positive root spaces in
/// decreasing order, with X_j as the basis vector of g_{beta_j}.
struct SolvablePart {
  AlgebraPtr algebra;
  Subspace in_g;                                 // same basis, as vectors of g
  std::vector<std::optional<std::size_t>> root;  // root index per basis vector (nullopt on a)

  std::size_t dim() const { return in_g.dim(); }
  /// Basis indices spanning g_beta (empty if beta is not a positive root).
  std::vector<std::size_t> indices_of(const RestrictedRootDatum& d, const QVec& beta) const;
  /// Restriction of a covector of g to a + n.
  QVec restrict(const QVec& f_on_g) const;
};

struct CascadeData {
  RestrictedRootDatum roots;
  Subspace n;
  std::vector<QVec> upsilon;   // beta_1 .. beta_r, beta_1 highest
  std::vector<QVec> X;         // X_j in g_{beta_j}
  std::vector<QVec> Y;         // X_j + theta X_j
  std::size_t r = 0;
  bool exists_open_orbit = false;
  std::string no_open_orbit_reason;

  // Graded pieces; filled when every positive root is a half-integral
  // combination of the cascade of the expected shape.
  bool graded = false;
  Subspace n1, n2, n3, nc;

  Subspace h_k;                // maximal abelian in m commuting with the Y_j
  Subspace t;                  // basis: Y_1..Y_r, then h_k; empty if none exists
  bool has_compact_cartan = false;
  std::string compact_cartan_failure;
  SolvablePart s;
  std::vector<std::size_t> x_index;   // index of X_j in the s basis
  std::vector<std::size_t> n3_index;  // s indices spanning n3

  /// Coordinates of gamma in the cascade basis (requires r = dim a).
  QVec cascade_coords(const QVec& gamma) const;
};

/// `orientation` optionally multiplies X_j by +-1 (used to align the X_j with a
/// holomorphic positive system).
CascadeData build_cascade(const RestrictedRootDatum& d, const std::vector<int>& orientation = {});

bool strongly_orthogonal(const RestrictedRootDatum& d, const QVec& b, const QVec& c);

/// <beta, gamma> through the dual of the Killing form on a.
Rational killing_dual_product(const RestrictedRootDatum& d, const QVec& beta, const QVec& gamma);

struct CanonicalRep {
  std::vector<int> signs;
  QVec covector;  // on the s basis
};

/// All 2^r sign patterns, in lexicographic order (+ before -).
std::vector<CanonicalRep> canonical_representatives(const CascadeData& c);

struct HypothesisReport {
  bool ok = false;
  std::string reason;
};
HypothesisReport verify_splitting_hypotheses(const CascadeData& c);

/// h_k plus span{Y_j}; verified abelian, theta-fixed, compact and
/// self-centralizing.
Subspace compact_cartan(const CascadeData& c, const Subspace& h_k);

}  // namespace orbitlab
