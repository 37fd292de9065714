// Shared fixtures for the unit tests.
#pragma once

#include "orbitlab/group.hpp"
#include "orbitlab/structure.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace orbitlab;

inline const std::vector<RealFormSpec>& all_algebras() {
  static const std::vector<RealFormSpec> v{RealFormSpec::su(1, 1), RealFormSpec::su(2, 1),    RealFormSpec::su(2, 2),
                                           RealFormSpec::sp(2),     RealFormSpec::sp(3),       RealFormSpec::so(2, 4),
                                           RealFormSpec::so_star(3), RealFormSpec::so(4, 1), RealFormSpec::so(5, 1)};
  return v;
}

inline const std::vector<RealFormSpec>& hermitian_algebras() {
  static const std::vector<RealFormSpec> v{RealFormSpec::su(1, 1), RealFormSpec::su(2, 1), RealFormSpec::su(2, 2),
                                           RealFormSpec::sp(2),     RealFormSpec::sp(3),    RealFormSpec::so(2, 4),
                                           RealFormSpec::so_star(3)};
  return v;
}

// Structures are expensive enough to share across test cases.
inline std::shared_ptr<const Structure> structure(const RealFormSpec& spec) {
  static std::map<std::string, std::shared_ptr<const Structure>> cache;
  auto& slot = cache[spec.name()];
  if (!slot) slot = std::make_shared<const Structure>(build_structure(spec));
  return slot;
}

inline std::shared_ptr<const GroupActions> actions(const RealFormSpec& spec) {
  static std::map<std::string, std::shared_ptr<const GroupActions>> cache;
  auto& slot = cache[spec.name()];
  if (!slot) slot = std::make_shared<const GroupActions>(structure(spec));
  return slot;
}

inline QVec random_vector(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  QVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

/// A regular weight in the holomorphic chamber: a large multiple of the weight
/// of -Z0 plus a small generic shift.
inline QVec holomorphic_weight(const Structure& s, long factor = 7) {
  QVec f = s.inner().weight_of(orbitlab::scale(z0_element(s.roots()), Rational(-1)));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational shift(static_cast<long>(i) + 1, 3);
    shift.canonicalize();
    f[i] = f[i] * factor + shift;
  }
  return f;
}

}  // namespace fixtures
