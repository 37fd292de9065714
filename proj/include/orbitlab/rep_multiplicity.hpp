// Lowest K-type data of a holomorphic discrete series parameter: Blattner
// parameter, Weyl dimensions, the symplectic volume of K.f and the open-orbit
// point h built from Z0.
#pragma once

#include "orbitlab/orbit_geometry.hpp"
#include "orbitlab/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

struct BlattnerData {
  QVec lambda;
  QVec Lambda;        // lambda + rho_G - 2 rho_K
  QVec Lambda_prime;  // lambda - rho_K
  PositiveSystem positive;
  RhoVectors rho;
};

/// Throws std::invalid_argument if lambda is singular or its noncompact
/// positive roots do not form a holomorphic system.
BlattnerData blattner(const Structure& s, const QVec& lambda);

/// prod over alpha in `compact_positive` of (L + rho_K, alpha) / (rho_K, alpha).
/// Throws std::invalid_argument when L is not dominant.
Rational weyl_dim(const Structure& s, const QVec& L, const std::vector<std::size_t>& compact_positive);

/// prod (lambda, alpha) / (rho_K, alpha); throws std::invalid_argument if some
/// factor vanishes.
Rational liouville_volume(const Structure& s, const QVec& lambda, const std::vector<std::size_t>& compact_positive);

/// weyl_dim(Lambda) == weyl_dim(Lambda').
bool lowest_k_types_agree(const Structure& s, const QVec& lambda);

/// 2 (lambda, alpha) / (alpha, alpha) integral for every root.
bool is_integral(const Structure& s, const QVec& lambda);

struct MonteCarloVolume {
  bool applicable = false;
  std::string chart;   // description of the chart and normalization
  std::size_t points = 0;
  double estimate = 0.0;
  double exact = 0.0;
  double relative_error = 0.0;
};
/// Monte Carlo symplectic volume of K.f when K.f is a product of 2-spheres
/// (pairwise orthogonal compact positive roots).
MonteCarloVolume monte_carlo_volume(const Structure& s, const QVec& lambda, const std::vector<std::size_t>& compact_positive,
                                    std::size_t points, std::uint64_t seed);

struct MultiplicityReport {
  BlattnerData data;
  Rational dim_tau_Lambda;
  Rational dim_tau_Lambda_prime;
  Rational liouville;
  bool all_equal = false;
  bool integral = false;
  std::vector<std::string> warnings;
  QVec z0;                 // t-coordinates
  QVec h;                  // -K(Z0, .) on a + n
  bool h_open = false;
  OrbitSignature h_signature;
  std::optional<MonteCarloVolume> monte_carlo;
};
MultiplicityReport multiplicity_report(const Structure& s, const QVec& lambda, std::size_t mc_points = 0,
                                       std::uint64_t seed = 0);

/// h = -K(Z0, .) restricted to a + n.
QVec h_point(const Structure& s);

}  // namespace orbitlab
