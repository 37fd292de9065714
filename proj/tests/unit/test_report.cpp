#include "common.hpp"
#include "orbitlab/report.hpp"

#include <doctest.h>

#include <filesystem>

using namespace orbitlab;

TEST_CASE("fractions and specs round-trip through JSON") {
  const Rational q = make_rational("-123456789012345678901234567890", "7");
  CHECK(fraction_from_json(Json::parse(fraction_json(q).dump())) == q);
  for (const auto& spec : fixtures::all_algebras()) {
    const auto back = spec_from_json(Json::parse(spec_json(spec).dump()));
    CHECK(back.family == spec.family);
    CHECK(back.params == spec.params);
  }
  CHECK_THROWS_AS(spec_from_json(Json{{"family", "su_pq"}, {"p", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(spec_from_json(Json{{"family", "nope"}, {"n", 2}}), std::invalid_argument);
}

TEST_CASE("algebra report fields") {
  const Json sp4 = algebra_report(*fixtures::structure(RealFormSpec::sp(2)));
  CHECK(sp4["open_orbit_count"] == 4);
  CHECK(sp4["schema_version"] == kSchemaVersion);
  CHECK(sp4["weyl_k_order"] == 2);
  CHECK(sp4["h_point"]["open"] == true);
  const Json su21 = algebra_report(*fixtures::structure(RealFormSpec::su(2, 1)));
  CHECK(su21["r"] == 1);
  CHECK(su21["upsilon"].size() == 1);
  CHECK(su21["open_orbit_count"] == 2);
  const Json so41 = algebra_report(*fixtures::structure(RealFormSpec::so(4, 1)));
  CHECK(so41["exists_open_orbit"] == false);
  CHECK(so41["open_orbit_count"] == 0);
  const Json so51 = algebra_report(*fixtures::structure(RealFormSpec::so(5, 1)));
  CHECK(so51["compact_cartan"]["exists"] == false);
}

TEST_CASE("reports are deterministic") {
  const auto act = fixtures::actions(RealFormSpec::sp(2));
  const QVec f = covector_from_t(act->structure(), QVec{2, -1});
  CHECK(verdict_json(verify_holomorphic_signatures(*act, f, 50, 3)).dump() == verdict_json(verify_holomorphic_signatures(*act, f, 50, 3)).dump());
  CHECK(algebra_report(*fixtures::structure(RealFormSpec::su(2, 2))).dump() ==
        algebra_report(build_structure(RealFormSpec::su(2, 2))).dump());
}

TEST_CASE("structure-constant cache is bit-exact") {
  const auto dir = std::filesystem::temp_directory_path() / "orbitlab_cache_test";
  std::filesystem::remove_all(dir);
  for (const auto& spec : fixtures::all_algebras()) {
    CAPTURE(spec.name());
    const LieAlgebra& g = fixtures::structure(spec)->form->algebra();
    const auto file = cache_file(dir, spec);
    save_algebra_cache(file, spec, g);
    const LieAlgebra back = load_algebra_cache(file);
    CHECK(identical(back, g));
    CHECK(back.killing_matrix() == g.killing_matrix());
  }
  // A tampered constant is detected.
  const RealFormSpec spec = RealFormSpec::sp(2);
  Json j = algebra_cache_json(spec, fixtures::structure(spec)->form->algebra());
  j["constants"][0]["num"] = "12345";
  CHECK_FALSE(identical(algebra_from_cache_json(j), fixtures::structure(spec)->form->algebra()));
  j["schema_version"] = 99;
  CHECK_THROWS(algebra_from_cache_json(j));
  std::filesystem::remove_all(dir);
}
