#include "common.hpp"
#include "oracles.hpp"
#include "orbitlab/orbit_geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace orbitlab;

namespace {

// Dimension of the top graded piece (the Jordan algebra of the tube domain,
// or g_{beta_1} alone in rank one).
std::size_t expected_n3_dim(const RealFormSpec& spec) {
  const std::string n = spec.name();
  if (n == "sp(4,R)") return 3;   // Sym(2, R)
  if (n == "sp(6,R)") return 6;   // Sym(3, R)
  if (n == "su(2,2)") return 4;   // Herm(2, C)
  if (n == "so(2,4)") return 4;   // Minkowski R^{1,3}
  return 1;
}

}  // namespace

TEST_CASE("cascade length and open-orbit count") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto& c = fixtures::structure(spec)->cascade;
    CHECK(c.exists_open_orbit);
    CHECK(c.r == oracle::cascade_length(spec));
    CHECK(canonical_representatives(c).size() == (std::size_t{1} << c.r));
    CHECK(c.n3.dim() == expected_n3_dim(spec));
    CHECK(c.n1.dim() + c.n2.dim() == c.s.dim());
    CHECK(c.n2.contains_subspace(c.n3));
    CHECK(verify_splitting_hypotheses(c).ok);
  }
}

TEST_CASE("no open orbit for so(4,1) and so(5,1)") {
  for (const auto& spec : {RealFormSpec::so(4, 1), RealFormSpec::so(5, 1)}) {
    CAPTURE(spec.name());
    const auto& c = fixtures::structure(spec)->cascade;
    CHECK_FALSE(c.exists_open_orbit);
    CHECK_FALSE(c.no_open_orbit_reason.empty());
  }
}

TEST_CASE("cascade roots are strongly orthogonal and X_j, Y_j are well placed") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    const auto& c = s->cascade;
    const LieAlgebra& g = s->form->algebra();
    for (std::size_t i = 0; i < c.r; ++i) {
      CHECK(c.roots.root(c.upsilon[i]).space.contains(c.X[i]));
      CHECK(s->cartan.k.contains(c.Y[i]));
      for (std::size_t j = i + 1; j < c.r; ++j) {
        CHECK(strongly_orthogonal(c.roots, c.upsilon[i], c.upsilon[j]));
        CHECK(is_zero_vec(g.bracket(c.Y[i], c.Y[j])));
      }
    }
    CHECK(c.roots.highest().coords == c.upsilon.front());
  }
}

TEST_CASE("canonical representatives are open with full KKS rank") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto& c = fixtures::structure(spec)->cascade;
    std::set<std::vector<int>> seen;
    for (const auto& rep : canonical_representatives(c)) {
      CHECK(rank(kks_matrix(*c.s.algebra, rep.covector)) == c.s.dim());
      const auto sig = cascade_signature(c, rep.covector);
      REQUIRE(sig.open);
      CHECK(sig.signs == rep.signs);
      seen.insert(rep.signs);
    }
    CHECK(seen.size() == (std::size_t{1} << c.r));
  }
}

TEST_CASE("compact Cartan and complex roots") {
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    if (spec.name() == "so(5,1)") {
      CHECK_FALSE(s->cascade.has_compact_cartan);
      CHECK_FALSE(s->cascade.compact_cartan_failure.empty());
      CHECK_THROWS_AS(s->roots(), std::logic_error);
      continue;
    }
    REQUIRE(s->complex.has_value());
    const auto& d = *s->complex;
    CHECK(is_abelian(d.t));
    CHECK(is_compact_subalgebra(d.t));
    CHECK(d.roots.size() == s->form->dim() - d.t.dim());
    CHECK(d.compact().size() == s->cartan.k.dim() - d.t.dim());
    CHECK(d.noncompact().size() == s->cartan.p.dim());
    for (const auto& r : d.roots) CHECK(d.find(scale(r.a, Rational(-1))).has_value());
    CHECK(s->weyl_k.size() == oracle::compact_weyl_order(spec));
  }
}

TEST_CASE("sp(4,R) roots in the standard coordinates") {
  const auto s = fixtures::structure(RealFormSpec::sp(2));
  std::set<QVec> roots, expected;
  for (const auto& r : s->roots().roots) roots.insert(r.a);
  for (int sg : {1, -1}) {
    expected.insert({2 * sg, 0});
    expected.insert({0, 2 * sg});
    expected.insert({sg, sg});
    expected.insert({sg, -sg});
  }
  CHECK(roots == expected);
  const auto rho = rho_vectors(s->roots());
  // Delta_n^+ = {2e1, e1 + e2, 2e2} and Delta_c^+ = {e1 - e2}.
  CHECK(rho.rho_G == QVec{2, 1});
  CHECK(rho.rho_K == QVec{Rational(1, 2), Rational(-1, 2)});
}

TEST_CASE("rho vectors, holomorphic system and Z0") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    const auto& d = s->roots();
    CHECK(s->hermitian);
    const auto rho = rho_vectors(d);
    CHECK(rho.rho_G == add(rho.rho_K, rho.rho_n));
    CHECK(bracket_closed(d, d.delta_n_plus));
    CHECK(wk_stable(d, s->weyl_k, d.delta_n_plus));
    CHECK(2 * d.delta_n_plus.size() == d.noncompact().size());
    const QVec z0 = z0_element(d);
    for (std::size_t i : d.delta_n_plus) CHECK(dot(d.roots[i].a, z0) == -1);
    for (std::size_t i : d.compact()) CHECK(sgn(dot(d.roots[i].a, z0)) == 0);
    // Z0 spans the centre of k.
    const QVec z = s->t_element(z0);
    for (const auto& k : s->cartan.k.basis()) CHECK(is_zero_vec(s->form->algebra().bracket(z, k)));
  }
}

TEST_CASE("non-Hermitian algebras have no holomorphic data") {
  const auto s = fixtures::structure(RealFormSpec::so(4, 1));
  CHECK_FALSE(s->hermitian);
  CHECK_FALSE(central_element(s->roots()).has_value());
  CHECK_THROWS_AS(z0_element(s->roots()), std::domain_error);
}

TEST_CASE("W_K acts by isometries and permutes the roots") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    const auto& d = s->roots();
    const auto& ip = s->inner();
    for (const auto& w : s->weyl_k) {
      for (const auto& r : d.roots) {
        const QVec image = w * r.a;
        const auto found = d.find(image);
        REQUIRE(found.has_value());
        CHECK(d.roots[*found].compact == r.compact);
        CHECK(ip.product(image, image) == ip.product(r.a, r.a));
      }
    }
  }
}
