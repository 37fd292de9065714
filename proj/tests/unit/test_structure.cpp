#include "common.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace orbitlab;

TEST_CASE("structure constants reproduce matrix commutators") {
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    CHECK(oracle::commutator_table_mismatch(*fixtures::structure(spec)->form) == "");
  }
}

TEST_CASE("exact Jacobi, antisymmetry, theta and Killing invariance") {
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    const LieAlgebra& g = fixtures::structure(spec)->form->algebra();
    CHECK(g.check_antisymmetry() == "");
    CHECK(g.check_jacobi() == "");
    CHECK(g.check_involution() == "");
    CHECK(g.check_killing_invariance() == "");
  }
}

TEST_CASE("Killing form equals the scaled trace form") {
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    const RealForm& rf = *fixtures::structure(spec)->form;
    const auto c = oracle::killing_trace_factor(spec);
    std::vector<oracle::ZMat> m;
    for (const auto& x : rf.basis_matrices()) m.push_back(oracle::from_library(x));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) REQUIRE(rf.algebra().killing_matrix()(i, j) == c * oracle::real_trace_product(m[i], m[j]));
  }
}

TEST_CASE("classical dimensions and real rank") {
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    CHECK(s->form->dim() == oracle::dim_g(spec));
    CHECK(s->cartan.k.dim() == oracle::dim_k(spec));
    CHECK(s->cartan.k.dim() + s->cartan.p.dim() == s->form->dim());
    CHECK(s->restricted().a.dim() == oracle::real_rank(spec));
    CHECK(is_compact_subalgebra(s->cartan.k));
  }
}

TEST_CASE("restricted root multiplicities match the classical tables") {
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    const auto& d = fixtures::structure(spec)->restricted();
    std::vector<std::size_t> mult;
    for (std::size_t i : d.positive) mult.push_back(d.roots[i].multiplicity());
    std::sort(mult.begin(), mult.end());
    CHECK(mult == oracle::positive_root_multiplicities(spec));
    CHECK(d.roots.size() == 2 * d.positive.size());
    for (const auto& r : d.roots) CHECK(d.is_root(scale(r.coords, Rational(-1))));
  }
}

TEST_CASE("su(2,1) restricted roots are beta with multiplicity 2 and 2 beta with multiplicity 1") {
  const auto& d = fixtures::structure(RealFormSpec::su(2, 1))->restricted();
  REQUIRE(d.positive.size() == 2);
  const auto& top = d.roots[d.positive[0]];
  const auto& low = d.roots[d.positive[1]];
  CHECK(top.coords == scale(low.coords, Rational(2)));
  CHECK(top.multiplicity() == 1);
  CHECK(low.multiplicity() == 2);
}

TEST_CASE("Iwasawa n is nilpotent and a + n solvable") {
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    CHECK(is_nilpotent(s->cascade.n));
    CHECK(is_solvable(sum(s->restricted().a, s->cascade.n)));
    CHECK(s->cascade.s.dim() == s->restricted().a.dim() + s->cascade.n.dim());
  }
}

TEST_CASE("invalid specifications are rejected") {
  CHECK_THROWS_AS(RealFormSpec::su(0, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(RealFormSpec::su(6, 6).validate(), std::invalid_argument);
  CHECK_THROWS_AS(RealFormSpec::so_star(1).validate(), std::invalid_argument);
  CHECK_THROWS_AS((RealFormSpec{Family::sp_2n_R, {1, 2}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("sl_n"), std::invalid_argument);
  CHECK(parse_family("so_2n_star") == Family::so_2n_star);
}
