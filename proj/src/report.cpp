#include "orbitlab/report.hpp"

#include <fstream>

namespace orbitlab {

namespace {

Json index_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

Json subspace_dims(const CascadeData& c) {
  return Json{{"n1", c.n1.dim()}, {"n2", c.n2.dim()}, {"n3", c.n3.dim()}, {"nc", c.nc.dim()}};
}

int param(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("spec: missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

Json fraction_json(const Rational& q) { return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Rational fraction_from_json(const Json& j) {
  return make_rational(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

Json vector_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(fraction_json(x));
  return out;
}

Json spec_json(const RealFormSpec& spec) {
  Json j{{"family", family_key(spec.family)}};
  if (spec.family == Family::su_pq || spec.family == Family::so_p_q) {
    j["p"] = spec.params.at(0);
    j["q"] = spec.params.at(1);
  } else {
    j["n"] = spec.params.at(0);
  }
  return j;
}

RealFormSpec spec_from_json(const Json& j) {
  RealFormSpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  if (spec.family == Family::su_pq || spec.family == Family::so_p_q)
    spec.params = {param(j, "p"), param(j, "q")};
  else
    spec.params = {param(j, "n")};
  spec.validate();
  return spec;
}

Json algebra_report(const Structure& s) {
  const RealForm& rf = *s.form;
  const CascadeData& c = s.cascade;
  const RestrictedRootDatum& d = c.roots;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "algebra";
  j["algebra"] = rf.spec().name();
  j["spec"] = spec_json(rf.spec());
  j["dim"] = rf.dim();
  j["dim_k"] = s.cartan.k.dim();
  j["dim_p"] = s.cartan.p.dim();
  j["dim_a"] = d.a.dim();
  j["dim_m"] = d.m.dim();
  j["dim_n"] = c.n.dim();
  j["basis_labels"] = rf.algebra().labels();

  Json roots = Json::array();
  for (const auto& r : d.roots)
    roots.push_back(Json{{"coords", vector_json(r.coords)}, {"multiplicity", r.multiplicity()}});
  j["restricted_roots"] = roots;
  j["positive_roots"] = index_list(d.positive);

  Json ups = Json::array();
  for (const auto& b : c.upsilon) ups.push_back(vector_json(b));
  j["upsilon"] = ups;
  j["r"] = c.r;
  j["exists_open_orbit"] = c.exists_open_orbit;
  if (!c.exists_open_orbit) j["no_open_orbit_reason"] = c.no_open_orbit_reason;
  j["open_orbit_count"] = c.exists_open_orbit ? (std::size_t{1} << c.r) : 0;
  j["graded"] = c.graded;
  if (c.graded) j["graded_dims"] = subspace_dims(c);
  const HypothesisReport hyp = verify_splitting_hypotheses(c);
  j["solvable_splitting_hypotheses"] = Json{{"ok", hyp.ok}, {"reason", hyp.reason}};

  Json cartan{{"exists", c.has_compact_cartan}};
  if (c.has_compact_cartan) {
    cartan["dim"] = c.t.dim();
    cartan["dim_h_k"] = c.h_k.dim();
  } else {
    cartan["failure"] = c.compact_cartan_failure;
  }
  j["compact_cartan"] = cartan;

  j["hermitian"] = s.hermitian;
  if (s.complex) {
    const ComplexRootDatum& cd = *s.complex;
    Json cr = Json::array();
    for (const auto& r : cd.roots) cr.push_back(Json{{"coords", vector_json(r.a)}, {"compact", r.compact}});
    j["complex_roots"] = cr;
    j["inner_product_gram"] = Json::array();
    for (std::size_t i = 0; i < s.inner().gram().rows(); ++i) j["inner_product_gram"].push_back(vector_json(s.inner().gram().row(i)));
    j["regular_element"] = vector_json(cd.regular_element);
    j["delta_c_plus"] = index_list(cd.delta_c_plus);
    j["delta_n_plus"] = index_list(cd.delta_n_plus);
    j["weyl_k_order"] = s.weyl_k.size();
    if (s.hermitian) {
      const RhoVectors rho = rho_vectors(cd);
      j["rho_G"] = vector_json(rho.rho_G);
      j["rho_K"] = vector_json(rho.rho_K);
      j["rho_n"] = vector_json(rho.rho_n);
      j["z0"] = vector_json(z0_element(cd));
      const QVec h = h_point(s);
      j["h_point"] = Json{{"open", is_open_orbit_point(c, h)}, {"signature", cascade_signature(c, h).to_string()}};
      const KostantHullReport kh = kostant_hull_check(s);
      j["kostant_hull"] = Json{{"beta", vector_json(kh.beta)}, {"orbit_size", kh.orbit.size()}, {"all_inside", kh.all_inside()}};
    }
  }
  return j;
}

Json verdict_json(const SignatureVerdict& v) {
  Json j;
  j["verdict"] = v.verdict;
  j["holomorphic"] = v.holomorphic;
  j["exists_open_orbit"] = v.exists_open_orbit;
  j["n_samples"] = v.n_samples;
  j["samples_used"] = v.samples_used;
  j["seed"] = v.seed;
  j["delta_n_plus"] = index_list(v.delta_n_plus);
  Json hist = Json::object();
  for (const auto& [k, n] : v.signatures_histogram) hist[k] = n;
  j["signatures_histogram"] = hist;
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back(Json{{"sample", x.sample}, {"signature", x.signature}});
  j["witnesses"] = w;
  j["failures"] = v.failures;
  return j;
}

Json multiplicity_json(const MultiplicityReport& r) {
  Json j;
  j["lambda"] = vector_json(r.data.lambda);
  j["Lambda"] = vector_json(r.data.Lambda);
  j["Lambda_prime"] = vector_json(r.data.Lambda_prime);
  j["rho_G"] = vector_json(r.data.rho.rho_G);
  j["rho_K"] = vector_json(r.data.rho.rho_K);
  j["dim_tau_Lambda"] = fraction_json(r.dim_tau_Lambda);
  j["dim_tau_Lambda_prime"] = fraction_json(r.dim_tau_Lambda_prime);
  j["liouville_volume"] = fraction_json(r.liouville);
  j["all_equal"] = r.all_equal;
  j["integral"] = r.integral;
  j["warnings"] = r.warnings;
  j["z0"] = vector_json(r.z0);
  j["h_point"] = Json{{"coords", vector_json(r.h)}, {"open", r.h_open}, {"signature", r.h_signature.to_string()}};
  if (r.monte_carlo) {
    const MonteCarloVolume& mc = *r.monte_carlo;
    j["monte_carlo"] = Json{{"applicable", mc.applicable}, {"chart", mc.chart},     {"points", mc.points},
                            {"estimate", mc.estimate},     {"exact", mc.exact},     {"relative_error", mc.relative_error}};
  }
  return j;
}

Json cone_json(const ConeReport& r, const WitnessSearch& w) {
  Json j;
  j["pairs"] = r.pairs;
  j["c_max_positive"] = r.c_max_positive;
  j["projection_all_plus"] = r.projection_all_plus;
  j["omega_in_n3"] = r.omega_in_n3;
  j["omega_all_plus"] = r.omega_all_plus;
  j["omega_pairing_positive"] = r.omega_pairing_positive;
  j["omega_self_dual"] = r.omega_self_dual;
  j["an_translate_identity"] = r.an_translate_identity;
  j["failures"] = r.failures;
  j["outside_witness"] = Json{{"status", w.status()}, {"attempts", w.attempts}, {"detail", w.detail}};
  return j;
}

Json algebra_cache_json(const RealFormSpec& spec, const LieAlgebra& g) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["spec"] = spec_json(spec);
  j["labels"] = g.labels();
  j["dim"] = g.dim();
  Json records = Json::array();
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t jj = 0; jj < d; ++jj)
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = g.constant(i, jj, k);
        if (sgn(c) == 0) continue;
        records.push_back(Json{{"i", i}, {"j", jj}, {"k", k}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
      }
  j["constants"] = records;
  Json theta = Json::array();
  for (std::size_t i = 0; i < g.theta().rows(); ++i) theta.push_back(vector_json(g.theta().row(i)));
  j["theta"] = theta;
  return j;
}

LieAlgebra algebra_from_cache_json(const Json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::runtime_error("cache: unsupported schema version");
  const auto labels = j.at("labels").get<std::vector<std::string>>();
  const std::size_t d = j.at("dim").get<std::size_t>();
  if (labels.size() != d) throw std::runtime_error("cache: label count does not match dim");
  std::vector<Rational> c(d * d * d, Rational(0));
  for (const auto& rec : j.at("constants")) {
    const std::size_t i = rec.at("i"), jj = rec.at("j"), k = rec.at("k");
    if (i >= d || jj >= d || k >= d) throw std::runtime_error("cache: index out of range");
    c[(i * d + jj) * d + k] = fraction_from_json(rec);
  }
  QMatrix theta(d, d);
  const Json& rows = j.at("theta");
  if (rows.size() != d) throw std::runtime_error("cache: theta has the wrong size");
  for (std::size_t r = 0; r < d; ++r) {
    if (rows[r].size() != d) throw std::runtime_error("cache: theta has the wrong size");
    for (std::size_t col = 0; col < d; ++col) theta(r, col) = fraction_from_json(rows[r][col]);
  }
  return LieAlgebra(labels, std::move(c), std::move(theta));
}

void save_algebra_cache(const std::filesystem::path& file, const RealFormSpec& spec, const LieAlgebra& g) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  // Write to a temporary and rename so readers never see a partial file.
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << algebra_cache_json(spec, g).dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file);
}

LieAlgebra load_algebra_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  return algebra_from_cache_json(Json::parse(in));
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const RealFormSpec& spec) {
  std::string name = family_key(spec.family);
  for (int p : spec.params) name += "_" + std::to_string(p);
  return dir / (name + ".json");
}

bool identical(const LieAlgebra& a, const LieAlgebra& b) {
  return a.labels() == b.labels() && a.constants() == b.constants() && a.theta() == b.theta();
}

}  // namespace orbitlab
