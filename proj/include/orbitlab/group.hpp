// Group words acting on g and g*, exactly when every letter is exact.
#pragma once

#include "orbitlab/structure.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <variant>
#include <vector>

namespace orbitlab {

/// exp(X) for X with ad X nilpotent (X in n or theta n).
struct NilpotentExp {
  QVec x;
};
/// exp(H) with e^{beta(H_m)} = t_m on the a basis; acts on g_beta by prod t_m^{beta_m}.
struct TorusScale {
  QVec t;
};
/// exp(phi W) in K, W = Z / sqrt(c) for a k basis matrix with Z^3 = -c Z,
/// given by (cos phi, sin phi) rational.
struct PythagoreanRotation {
  std::size_t generator = 0;  // basis index in g
  Rational cos;
  Rational sin;
};
/// exp(time X), approximate.
struct FloatExp {
  QVec x;
  double time = 0.0;
};

using Letter = std::variant<NilpotentExp, TorusScale, PythagoreanRotation, FloatExp>;

/// g = letters[0] * letters[1] * ... ; the last letter acts first.
struct GroupWord {
  std::vector<Letter> letters;
  bool exact() const;
  std::size_t size() const { return letters.size(); }
};

/// Per-sample generator derived from (seed, index).
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

class GroupActions {
 public:
  explicit GroupActions(std::shared_ptr<const Structure> s);

  /// Ad of one exact letter (or of its inverse).
  QMatrix ad_matrix(const Letter& l, bool inverse = false) const;
  /// Ad(g) x.
  QVec adjoint(const GroupWord& w, const QVec& x) const;
  /// g . f = f o Ad(g)^{-1}.
  QVec coadjoint(const GroupWord& w, const QVec& f) const;
  /// Double-precision coadjoint action; accepts FloatExp letters.
  std::vector<double> coadjoint_float(const GroupWord& w, const std::vector<double>& f) const;
  /// theta(g): exp(X) -> exp(theta X), a -> a^{-1}, K fixed.
  GroupWord theta(const GroupWord& w) const;

  /// Basis indices usable as rotation generators.
  const std::vector<std::size_t>& rotation_generators() const { return generators_; }

  // Random letters and words.
  PythagoreanRotation random_rotation(std::mt19937_64& rng) const;
  TorusScale random_torus(std::mt19937_64& rng) const;
  NilpotentExp random_nilpotent(std::mt19937_64& rng, bool positive = true, int range = 2) const;
  /// Element of n_c (coordinates in g), coefficients in [-range, range].
  QVec random_in(std::mt19937_64& rng, const Subspace& s, int range) const;
  /// K-word of `rotations` rotations.
  GroupWord random_k_word(std::mt19937_64& rng, std::size_t rotations) const;
  /// AN-word of alternating torus scalings and nilpotent exponentials.
  GroupWord random_an_word(std::mt19937_64& rng, std::size_t length) const;
  /// AN-word followed by a K-word (K acts first).
  GroupWord random_g_word(std::mt19937_64& rng, std::size_t rotations, std::size_t an_length) const;

  const Structure& structure() const { return *s_; }

 private:
  std::shared_ptr<const Structure> s_;
  std::vector<std::size_t> generators_;
  std::vector<CMatrix> w_;    // normalized generator W with W^3 = -W
  std::vector<CMatrix> w2_;   // W^2
  QMatrix torus_basis_;       // columns: restricted root decomposition of g
  QMatrix torus_basis_inv_;
  std::vector<QVec> torus_weight_;  // beta per column (zero on g_0)
  Subspace n_;
  Subspace theta_n_;
};

}  // namespace orbitlab
