// JSON reports and the structure-constant cache.
#pragma once

#include "orbitlab/orbit_geometry.hpp"
#include "orbitlab/rep_multiplicity.hpp"
#include "orbitlab/structure.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace orbitlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"num": "...", "den": "..."}
Json fraction_json(const Rational& q);
Rational fraction_from_json(const Json& j);
Json vector_json(const QVec& v);

Json spec_json(const RealFormSpec& spec);
/// Accepts {"family": "sp_2n_R", "n": 2} or {"family": "su_pq", "p": 2, "q": 1}.
RealFormSpec spec_from_json(const Json& j);

Json algebra_report(const Structure& s);
Json verdict_json(const SignatureVerdict& v);
Json multiplicity_json(const MultiplicityReport& r);
Json cone_json(const ConeReport& r, const WitnessSearch& w);

/// Cache layout: {"schema_version", "spec", "labels", "dim", "constants":
/// [{"i","j","k","num","den"} for nonzero c_ijk], "theta": [[fraction]]}.
Json algebra_cache_json(const RealFormSpec& spec, const LieAlgebra& g);
LieAlgebra algebra_from_cache_json(const Json& j);
void save_algebra_cache(const std::filesystem::path& file, const RealFormSpec& spec, const LieAlgebra& g);
LieAlgebra load_algebra_cache(const std::filesystem::path& file);
std::filesystem::path cache_file(const std::filesystem::path& dir, const RealFormSpec& spec);
/// Labels, structure constants and theta all equal, exactly.
bool identical(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace orbitlab
