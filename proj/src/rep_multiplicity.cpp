#include "orbitlab/rep_multiplicity.hpp"

#include "orbitlab/parallel.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace orbitlab {

BlattnerData blattner(const Structure& s, const QVec& lambda) {
  const ComplexRootDatum& d = s.roots();
  BlattnerData out;
  out.lambda = lambda;
  out.positive = positive_system_of(d, s.inner(), lambda);
  if (!bracket_closed(d, out.positive.noncompact))
    throw std::invalid_argument("lambda does not determine a holomorphic positive system");
  out.rho = rho_vectors(d, out.positive.compact, out.positive.noncompact);
  out.Lambda = sub(add(lambda, out.rho.rho_G), scale(out.rho.rho_K, Rational(2)));
  out.Lambda_prime = sub(lambda, out.rho.rho_K);
  return out;
}

Rational weyl_dim(const Structure& s, const QVec& L, const std::vector<std::size_t>& compact_positive) {
  const ComplexRootDatum& d = s.roots();
  const InnerProductOnT& ip = s.inner();
  const QVec rho_k = rho_vectors(d, compact_positive, {}).rho_K;
  const QVec shifted = add(L, rho_k);
  Rational dim = 1;
  for (std::size_t i : compact_positive) {
    const QVec& a = d.roots[i].a;
    if (sgn(ip.product(L, a)) < 0) throw std::invalid_argument("weyl_dim: weight is not dominant");
    dim *= ip.product(shifted, a) / ip.product(rho_k, a);
  }
  return dim;
}

Rational liouville_volume(const Structure& s, const QVec& lambda, const std::vector<std::size_t>& compact_positive) {
  const ComplexRootDatum& d = s.roots();
  const InnerProductOnT& ip = s.inner();
  const QVec rho_k = rho_vectors(d, compact_positive, {}).rho_K;
  Rational vol = 1;
  for (std::size_t i : compact_positive) {
    const Rational num = ip.product(lambda, d.roots[i].a);
    if (sgn(num) == 0) throw std::invalid_argument("liouville_volume: degenerate K-orbit");
    vol *= num / ip.product(rho_k, d.roots[i].a);
  }
  return vol;
}

bool lowest_k_types_agree(const Structure& s, const QVec& lambda) {
  const BlattnerData b = blattner(s, lambda);
  return weyl_dim(s, b.Lambda, b.positive.compact) == weyl_dim(s, b.Lambda_prime, b.positive.compact);
}

bool is_integral(const Structure& s, const QVec& lambda) {
  const InnerProductOnT& ip = s.inner();
  for (const auto& root : s.roots().roots) {
    const Rational q = 2 * ip.product(lambda, root.a) / ip.product(root.a, root.a);
    if (q.get_den() != 1) return false;
  }
  return true;
}

MonteCarloVolume monte_carlo_volume(const Structure& s, const QVec& lambda, const std::vector<std::size_t>& compact_positive,
                                    std::size_t points, std::uint64_t seed) {
  const ComplexRootDatum& d = s.roots();
  const InnerProductOnT& ip = s.inner();
  MonteCarloVolume mc;
  mc.points = points;
  for (std::size_t i = 0; i < compact_positive.size(); ++i)
    for (std::size_t j = i + 1; j < compact_positive.size(); ++j)
      if (sgn(ip.product(d.roots[compact_positive[i]].a, d.roots[compact_positive[j]].a)) != 0) {
        mc.chart = "K.f is not a product of 2-spheres; exact product formula only";
        return mc;
      }
  mc.applicable = true;
  mc.chart =
      "product of spheres S^2, coordinates (theta, phi) in [0,pi]x[0,2pi]; the KKS form on the sphere of "
      "radius R = (lambda, alpha^vee)/2 is R sin(theta) dtheta dphi and each factor is divided by 2 pi; "
      "theta is sampled uniformly and the phi integral is done in closed form";
  std::vector<double> radius;
  for (std::size_t i : compact_positive) {
    const QVec& a = d.roots[i].a;
    const Rational coroot_pairing = 2 * ip.product(lambda, a) / ip.product(a, a);
    radius.push_back(std::fabs(coroot_pairing.get_d()) / 2);
  }
  mc.exact = std::fabs(liouville_volume(s, lambda, compact_positive).get_d());
  if (points == 0) return mc;

  const std::size_t block = 100000;
  const std::size_t blocks = (points + block - 1) / block;
  const double pi = std::acos(-1.0);
  const auto sums = parallel_map(0, blocks, [&](std::size_t b) {
    auto rng = sample_rng(seed, b);
    std::uniform_real_distribution<double> theta(0.0, pi);
    const std::size_t n = std::min(block, points - b * block);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double v = 1.0;
      for (double r : radius) v *= r * std::sin(theta(rng));
      sum += v;
    }
    return sum;
  });
  const double total = std::accumulate(sums.begin(), sums.end(), 0.0);
  // The phi integral contributes 2 pi per factor and cancels the 1 / (2 pi).
  mc.estimate = std::pow(pi, static_cast<double>(radius.size())) * total / static_cast<double>(points);
  mc.relative_error = mc.exact == 0.0 ? 0.0 : std::fabs(mc.estimate - mc.exact) / mc.exact;
  return mc;
}

QVec h_point(const Structure& s) {
  const QVec z0 = z0_element(s.roots());
  return s.cascade.s.restrict(killing_dual(*s.g(), s.t_element(z0)).coords);
}

MultiplicityReport multiplicity_report(const Structure& s, const QVec& lambda, std::size_t mc_points, std::uint64_t seed) {
  MultiplicityReport r;
  r.data = blattner(s, lambda);
  const auto& cpos = r.data.positive.compact;
  r.dim_tau_Lambda = weyl_dim(s, r.data.Lambda, cpos);
  r.dim_tau_Lambda_prime = weyl_dim(s, r.data.Lambda_prime, cpos);
  r.liouville = liouville_volume(s, lambda, cpos);
  r.all_equal = r.dim_tau_Lambda == r.dim_tau_Lambda_prime && r.dim_tau_Lambda_prime == r.liouville;
  r.integral = is_integral(s, lambda);
  if (!r.integral) r.warnings.push_back("lambda is not integral; identities are checked as rational identities");
  r.z0 = z0_element(s.roots());
  r.h = h_point(s);
  r.h_open = is_open_orbit_point(s.cascade, r.h);
  r.h_signature = cascade_signature(s.cascade, r.h);
  if (mc_points > 0) r.monte_carlo = monte_carlo_volume(s, lambda, cpos, mc_points, seed);
  return r;
}

}  // namespace orbitlab
