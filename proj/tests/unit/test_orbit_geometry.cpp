#include "common.hpp"
#include "oracles.hpp"
#include "orbitlab/orbit_geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace orbitlab;

namespace {

QVec random_open_point(const CascadeData& c, std::mt19937_64& rng) {
  for (;;) {
    QVec l = fixtures::random_vector(rng, c.s.dim(), 3);
    if (is_open_orbit_point(c, l)) return l;
  }
}

// lambda restricted to n3 = {[[0, S], [0, 0]]} in sp(2n, R), written as the
// symmetric T with lambda(S) = tr(T S).
oracle::QMat symmetric_model(const Structure& s, const QVec& lambda) {
  const auto& c = s.cascade;
  const std::size_t n = s.form->matrix_size() / 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
  QMatrix a(c.n3_index.size(), slots.size());
  QVec b;
  for (std::size_t row = 0; row < c.n3_index.size(); ++row) {
    const std::size_t k = c.n3_index[row];
    const CMatrix m = s.form->matrix(c.s.in_g.basis()[k]);
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < 2 * n; ++j) {
        REQUIRE(m(i, j).is_real());
        if (i >= n || j < n) REQUIRE(is_zero(m(i, j)));
      }
    for (std::size_t t = 0; t < slots.size(); ++t) {
      const auto [i, j] = slots[t];
      // tr(T S) picks T_ij S_ji + T_ji S_ij.
      a(row, t) = i == j ? m(i, n + i).re : m(j, n + i).re + m(i, n + j).re;
    }
    b.push_back(lambda[k]);
  }
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  oracle::QMat t(n, std::vector<oracle::Q>(n));
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto [i, j] = slots[k];
    t[i][j] = t[j][i] = (*x)[k];
  }
  return t;
}

}  // namespace

TEST_CASE("openness by KKS rank agrees with the elimination signature") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto& c = fixtures::structure(spec)->cascade;
    std::mt19937_64 rng(21);
    std::size_t open = 0;
    for (int t = 0; t < 300; ++t) {
      QVec l = fixtures::random_vector(rng, c.s.dim(), 2);
      if (t % 4 == 0) l[c.x_index[0]] = 0;
      const bool by_rank = is_open_orbit_point(c, l);
      const auto sig = cascade_signature(c, l);
      REQUIRE(by_rank == sig.open);
      if (!sig.open) CHECK(sig.pivot >= 1);
      open += by_rank;
    }
    CHECK(open > 0);
    CHECK(open < 300);
  }
}

TEST_CASE("signature does not depend on the elimination order") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto& c = fixtures::structure(spec)->cascade;
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
      const QVec l = fixtures::random_vector(rng, c.s.dim(), 3);
      const auto a = cascade_signature(c, l, EliminationOrder::increasing);
      const auto b = cascade_signature(c, l, EliminationOrder::reversed);
      REQUIRE(a.open == b.open);
      if (a.open) CHECK(a.signs == b.signs);
    }
  }
}

TEST_CASE("signature is constant along AN-orbits") {
  for (const auto& spec : {RealFormSpec::su(1, 1), RealFormSpec::su(2, 1), RealFormSpec::sp(2), RealFormSpec::su(2, 2)}) {
    CAPTURE(spec.name());
    const auto act = fixtures::actions(spec);
    const auto& c = act->structure().cascade;
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
      const QVec l = random_open_point(c, rng);
      const QVec moved = an_coadjoint(*act, act->random_an_word(rng, 4), l);
      const auto sig = cascade_signature(c, moved);
      REQUIRE(sig.open);
      CHECK(sig == cascade_signature(c, l));
    }
  }
}

TEST_CASE("symmetric-matrix model of sp(2n, R)") {
  for (const auto& spec : {RealFormSpec::sp(2), RealFormSpec::sp(3)}) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    std::mt19937_64 rng(24);
    std::size_t compared = 0;
    for (int t = 0; t < 150; ++t) {
      const QVec l = fixtures::random_vector(rng, s->cascade.s.dim(), 3);
      const auto sig = cascade_signature(s->cascade, l);
      const auto T = symmetric_model(*s, l);
      const auto [pos, neg] = oracle::inertia(T);
      if (pos + neg < T.size()) CHECK_FALSE(sig.open);
      if (!sig.open) continue;
      ++compared;
      CHECK(pos + neg == T.size());
      CHECK(static_cast<std::size_t>(std::count(sig.signs.begin(), sig.signs.end(), 1)) == pos);
    }
    CHECK(compared > 20);
  }
}

TEST_CASE("sp(4,R) symmetric-matrix examples") {
  const auto s = fixtures::structure(RealFormSpec::sp(2));
  const auto reps = canonical_representatives(s->cascade);
  REQUIRE(reps.size() == 4);
  for (const auto& rep : reps) {
    const auto T = symmetric_model(*s, rep.covector);
    // Canonical representatives are diagonal with entries of the given signs.
    CHECK(T[0][1] == 0);
    const auto [pos, neg] = oracle::inertia(T);
    CHECK(pos == static_cast<std::size_t>(std::count(rep.signs.begin(), rep.signs.end(), 1)));
    CHECK(neg == static_cast<std::size_t>(std::count(rep.signs.begin(), rep.signs.end(), -1)));
  }
}

TEST_CASE("holomorphicity is invariant under positive scaling and W_K") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    std::mt19937_64 rng(25);
    std::size_t holo = 0, tested = 0;
    for (int t = 0; t < 40; ++t) {
      const QVec f_t = fixtures::random_vector(rng, s->cascade.t.dim(), 6);
      const QVec f = covector_from_t(*s, f_t);
      if (!is_strongly_elliptic(s->g(), f)) continue;
      ++tested;
      const bool h = is_holomorphic(*s, f);
      holo += h;
      CHECK(is_holomorphic(*s, scale(f, Rational(5, 3))) == h);
      for (const auto& w : s->weyl_k) CHECK(is_holomorphic(*s, covector_from_t(*s, w * f_t)) == h);
    }
    CHECK(tested > 10);
  }
}

TEST_CASE("holomorphic example weights") {
  const auto s = fixtures::structure(RealFormSpec::sp(2));
  CHECK(is_holomorphic(*s, covector_from_t(*s, QVec{2, 1})));
  CHECK_FALSE(is_holomorphic(*s, covector_from_t(*s, QVec{2, -1})));
  CHECK(is_holomorphic(*s, covector_from_t(*s, QVec{-1, -2})));
  // Vanishing on a noncompact root makes the stabilizer noncompact.
  CHECK_THROWS_AS(holomorphicity(*s, covector_from_t(*s, QVec{1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(holomorphicity(*s, covector_from_t(*s, QVec{1, -1})), std::invalid_argument);
  const auto so51 = fixtures::structure(RealFormSpec::so(5, 1));
  CHECK_THROWS_AS(holomorphicity(*so51, QVec(so51->form->dim(), Rational(0))), std::domain_error);
}

TEST_CASE("projection to n3 through the inner product") {
  const auto s = fixtures::structure(RealFormSpec::sp(2));
  std::mt19937_64 rng(26);
  for (int t = 0; t < 100; ++t) {
    const QVec f = fixtures::random_vector(rng, s->form->dim(), 4);
    CHECK(projection_diagram_commutes(s->cascade, f));
  }
}

TEST_CASE("exact orbit samples stay elliptic and keep holomorphicity") {
  for (const auto& spec : {RealFormSpec::sp(2), RealFormSpec::su(2, 1)}) {
    CAPTURE(spec.name());
    const auto act = fixtures::actions(spec);
    const Structure& s = act->structure();
    const QVec f = covector_from_t(s, fixtures::holomorphic_weight(s));
    for (std::uint64_t i = 0; i < 10; ++i) {
      const QVec x = sample_orbit_point(*act, f, 3, i);
      CHECK(is_strongly_elliptic(s.g(), x));
      CHECK(rank(kks_matrix(s.form->algebra(), x)) == rank(kks_matrix(s.form->algebra(), f)));
    }
  }
}

TEST_CASE("double and exact coadjoint actions agree") {
  const auto act = fixtures::actions(RealFormSpec::su(2, 1));
  const Structure& s = act->structure();
  std::mt19937_64 rng(27);
  for (int t = 0; t < 20; ++t) {
    const GroupWord w = act->random_g_word(rng, 2, 2);
    const QVec f = fixtures::random_vector(rng, s.form->dim(), 3);
    const QVec exact = act->coadjoint(w, f);
    std::vector<double> fd;
    for (const auto& v : f) fd.push_back(v.get_d());
    const auto approx = act->coadjoint_float(w, fd);
    for (std::size_t k = 0; k < exact.size(); ++k) CHECK(approx[k] == doctest::Approx(exact[k].get_d()).epsilon(1e-9));
  }
}

TEST_CASE("group actions: inverses and theta") {
  const auto act = fixtures::actions(RealFormSpec::sp(2));
  const Structure& s = act->structure();
  const LieAlgebra& g = s.form->algebra();
  std::mt19937_64 rng(28);
  for (int t = 0; t < 20; ++t) {
    const GroupWord w = act->random_g_word(rng, 2, 3);
    const QVec x = fixtures::random_vector(rng, g.dim(), 3), y = fixtures::random_vector(rng, g.dim(), 3);
    // Ad(g) is an automorphism preserving the Killing form.
    CHECK(act->adjoint(w, g.bracket(x, y)) == g.bracket(act->adjoint(w, x), act->adjoint(w, y)));
    CHECK(g.killing(act->adjoint(w, x), act->adjoint(w, y)) == g.killing(x, y));
    // Ad(theta g) = theta Ad(g) theta.
    CHECK(act->adjoint(act->theta(w), x) == g.apply_theta(act->adjoint(w, g.apply_theta(x))));
    for (const auto& l : w.letters) CHECK(act->ad_matrix(l) * act->ad_matrix(l, true) == QMatrix::identity(g.dim()));
  }
}

TEST_CASE("signature driver is deterministic and consistent on sp(4,R)") {
  const auto act = fixtures::actions(RealFormSpec::sp(2));
  const Structure& s = *fixtures::structure(RealFormSpec::sp(2));
  const QVec f = covector_from_t(s, QVec{2, 1});
  const auto a = verify_holomorphic_signatures(*act, f, 40, 5);
  const auto b = verify_holomorphic_signatures(*act, f, 40, 5);
  CHECK(a.verdict == "CONSISTENT-HOLOMORPHIC");
  CHECK(a.signatures_histogram == b.signatures_histogram);
  CHECK(a.signatures_histogram.size() == 1);
  const auto n = verify_holomorphic_signatures(*act, covector_from_t(s, QVec{2, -1}), 200, 5);
  CHECK(n.verdict == "CONSISTENT-NONHOLOMORPHIC");
  CHECK_FALSE(n.holomorphic);
  CHECK(n.samples_used < 200);
}

TEST_CASE("signature driver reports the missing open orbit for so(4,1)") {
  const auto act = fixtures::actions(RealFormSpec::so(4, 1));
  const Structure& s = act->structure();
  const QVec f = covector_from_t(s, QVec{3, 1});
  REQUIRE(is_strongly_elliptic(s.g(), f));
  const auto v = verify_holomorphic_signatures(*act, f, 10, 1);
  CHECK(v.verdict == "NO-OPEN-ORBIT");
  CHECK_FALSE(v.holomorphic);
}

TEST_CASE("sign of the X_1 coordinate along AN-orbits") {
  const auto act = fixtures::actions(RealFormSpec::sp(2));
  bool flip_seen = false;
  for (const auto& rep : canonical_representatives(act->structure().cascade)) {
    const auto r = x1_sign_check(*act, rep, 60, 9);
    CHECK(r.x1_sign_constant);
    flip_seen = flip_seen || r.x2_flip.has_value();
  }
  CHECK(flip_seen);
}

TEST_CASE("noncompact positive roots lie in the hull of the W_K-orbit of the top root") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto r = kostant_hull_check(*fixtures::structure(spec));
    CHECK(r.all_inside());
    CHECK(r.orbit_sum_fixed);
  }
}

TEST_CASE("cone inequalities on small samples") {
  for (const auto& spec : {RealFormSpec::su(1, 1), RealFormSpec::su(2, 1), RealFormSpec::sp(2)}) {
    CAPTURE(spec.name());
    const auto act = fixtures::actions(spec);
    const auto r = cone_tests(*act, 10, 4);
    CHECK(r.ok());
    CHECK(r.c_max_positive == 10);
    CHECK(r.omega_self_dual == 10);
  }
  const auto act = fixtures::actions(RealFormSpec::sp(2));
  std::mt19937_64 rng(5);
  const QVec inside = sample_c_max(act->structure(), rng);
  for (std::size_t i : act->structure().roots().delta_n_plus) CHECK(sgn(dot(act->structure().roots().roots[i].a, inside)) > 0);
  CHECK(cone_witness_search(*act, QVec{1, -1}, 200, 1).found);
}

TEST_CASE("flipping X_j flips exactly the j-th sign") {
  const auto s = fixtures::structure(RealFormSpec::sp(2));
  const auto& c = s->cascade;
  const CascadeData flipped = build_cascade(c.roots, {1, -1});
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    // Same covector of g restricted through both bases.
    const QVec f = fixtures::random_vector(rng, s->form->dim(), 3);
    const auto a = cascade_signature(c, c.s.restrict(f));
    const auto b = cascade_signature(flipped, flipped.s.restrict(f));
    REQUIRE(a.open == b.open);
    if (!a.open) continue;
    CHECK(b.signs[0] == a.signs[0]);
    CHECK(b.signs[1] == -a.signs[1]);
  }
}

TEST_CASE("positive systems do not depend on the scale of the inner product") {
  for (const auto& spec : fixtures::hermitian_algebras()) {
    CAPTURE(spec.name());
    const auto s = fixtures::structure(spec);
    std::mt19937_64 rng(30);
    for (int t = 0; t < 20; ++t) {
      const QVec l = fixtures::random_vector(rng, s->cascade.t.dim(), 9);
      PositiveSystem a, b;
      try {
        a = positive_system_of(s->roots(), s->inner(), l);
      } catch (const std::invalid_argument&) {
        continue;
      }
      b = positive_system_of(s->roots(), s->inner().scaled(Rational(7, 2)), l);
      CHECK(a.compact == b.compact);
      CHECK(a.noncompact == b.noncompact);
    }
  }
}

TEST_CASE("f and -f give the two opposite constant signatures") {
  for (const auto& spec : {RealFormSpec::sp(2), RealFormSpec::su(2, 1), RealFormSpec::su(2, 2)}) {
    CAPTURE(spec.name());
    const auto act = fixtures::actions(spec);
    const Structure& s = act->structure();
    const QVec f = covector_from_t(s, fixtures::holomorphic_weight(s));
    const auto plus = verify_holomorphic_signatures(*act, f, 30, 2);
    const auto minus = verify_holomorphic_signatures(*act, scale(f, Rational(-1)), 30, 2);
    REQUIRE(plus.signatures_histogram.size() == 1);
    REQUIRE(minus.signatures_histogram.size() == 1);
    std::string flipped = plus.signatures_histogram.begin()->first;
    for (auto& ch : flipped) ch = ch == '+' ? '-' : ch == '-' ? '+' : ch;
    CHECK(minus.signatures_histogram.begin()->first == flipped);
  }
}

TEST_CASE("double-precision samples keep the dual Killing norm") {
  for (const auto& spec : {RealFormSpec::sp(2), RealFormSpec::su(2, 1)}) {
    CAPTURE(spec.name());
    const auto act = fixtures::actions(spec);
    const Structure& s = act->structure();
    const QMatrix kinv = inverse(s.form->algebra().killing_matrix());
    const QVec f = covector_from_t(s, fixtures::holomorphic_weight(s));
    const double norm = dot(f, kinv * f).get_d();
    for (std::uint64_t i = 0; i < 10; ++i) {
      const auto x = sample_orbit_point_float(*act, f, 4, i);
      double v = 0;
      for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b) v += x[a] * kinv(a, b).get_d() * x[b];
      CHECK(v == doctest::Approx(norm).epsilon(1e-9));
    }
  }
}
