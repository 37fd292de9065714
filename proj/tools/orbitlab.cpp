// orbitlab: command-line driver writing JSON reports.
//
// Exit codes: 0 ok, 1 hard invariant failure, 2 invalid arguments,
// 3 inconclusive sampling.

#include "orbitlab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

using namespace orbitlab;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;
constexpr int kInconclusive = 3;

struct RunConfig {
  std::string family;
  std::string params;
  std::string f;
  std::string lambda;
  std::size_t samples = 200;
  std::size_t mc_points = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string cache;
};

class CacheMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

QVec parse_vector(const std::string& text, std::size_t expected, const char* what) {
  QVec v;
  for (const auto& p : split_commas(text)) v.push_back(parse_rational(p));
  if (v.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) + " coordinates, got " +
                                std::to_string(v.size()));
  return v;
}

RealFormSpec parse_spec(const RunConfig& cfg) {
  if (cfg.family.empty()) throw std::invalid_argument("--family is required");
  RealFormSpec spec;
  spec.family = parse_family(cfg.family);
  for (const auto& p : split_commas(cfg.params)) {
    std::size_t used = 0;
    const int v = std::stoi(p, &used);
    if (used != p.size()) throw std::invalid_argument("--params: '" + p + "' is not an integer");
    spec.params.push_back(v);
  }
  spec.validate();
  return spec;
}

// Loads the cached structure constants if present and insists they equal the
// fresh construction; otherwise writes them.
Json sync_cache(const RunConfig& cfg, const RealFormSpec& spec, const LieAlgebra& fresh) {
  if (cfg.cache.empty()) return Json{{"used", false}};
  const auto file = cache_file(cfg.cache, spec);
  if (std::filesystem::exists(file)) {
    if (!identical(load_algebra_cache(file), fresh)) throw CacheMismatch("cached algebra differs from fresh build: " + file.string());
    return Json{{"used", true}, {"file", file.string()}, {"status", "verified"}};
  }
  save_algebra_cache(file, spec, fresh);
  return Json{{"used", true}, {"file", file.string()}, {"status", "written"}};
}

Json header(const std::string& command, const RunConfig& cfg, const RealFormSpec& spec) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["algebra"] = spec.name();
  j["spec"] = spec_json(spec);
  j["seed"] = cfg.seed;
  return j;
}

void emit(const Json& j, const RunConfig& cfg) {
  const std::string text = j.dump(2);
  if (cfg.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw std::runtime_error("cannot write " + cfg.out);
  out << text << '\n';
}

std::shared_ptr<const Structure> load(const RunConfig& cfg, RealFormSpec& spec, Json& cache) {
  spec = parse_spec(cfg);
  auto s = std::make_shared<const Structure>(build_structure(spec));
  cache = sync_cache(cfg, spec, s->form->algebra());
  return s;
}

int cmd_algebra(const RunConfig& cfg) {
  RealFormSpec spec;
  Json cache;
  const auto s = load(cfg, spec, cache);
  Json j = algebra_report(*s);
  j["cache"] = cache;
  emit(j, cfg);
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  RealFormSpec spec;
  Json cache;
  const auto s = load(cfg, spec, cache);
  if (cfg.f.empty()) throw std::invalid_argument("--f is required (values on the compact Cartan basis)");
  if (!s->cascade.has_compact_cartan) throw std::invalid_argument(spec.name() + " has no compact Cartan subalgebra");
  const QVec f_t = parse_vector(cfg.f, s->cascade.t.dim(), "--f");
  const QVec f = covector_from_t(*s, f_t);
  GroupActions act(s);
  const SignatureVerdict v = verify_holomorphic_signatures(act, f, cfg.samples, cfg.seed);
  Json j = header("verify-theorem", cfg, spec);
  j["f_t"] = vector_json(f_t);
  j.update(verdict_json(v));
  j["cache"] = cache;
  emit(j, cfg);
  if (v.verdict == "INCONSISTENT") return kFailure;
  if (v.verdict == "INCONCLUSIVE") return kInconclusive;
  return kOk;
}

int cmd_multiplicity(const RunConfig& cfg) {
  RealFormSpec spec;
  Json cache;
  const auto s = load(cfg, spec, cache);
  if (cfg.lambda.empty()) throw std::invalid_argument("--lambda is required (weight on the compact Cartan basis)");
  if (!s->hermitian) throw std::invalid_argument(spec.name() + " is not of Hermitian type");
  const QVec lambda = parse_vector(cfg.lambda, s->cascade.t.dim(), "--lambda");
  const MultiplicityReport r = multiplicity_report(*s, lambda, cfg.mc_points, cfg.seed);
  Json j = header("multiplicity", cfg, spec);
  j.update(multiplicity_json(r));
  j["cache"] = cache;
  emit(j, cfg);
  if (!r.all_equal || !r.h_open) return kFailure;
  if (r.monte_carlo && r.monte_carlo->applicable && r.monte_carlo->relative_error > 0.02) return kInconclusive;
  return kOk;
}

// A point of t strictly outside c_max: -z0 with its first coordinate flipped
// when that leaves the cone, otherwise z0.
QVec point_outside_c_max(const Structure& s) {
  const ComplexRootDatum& d = s.roots();
  const QVec z0 = z0_element(d);
  auto strictly_outside = [&](const QVec& x) {
    for (std::size_t i : d.delta_n_plus)
      if (sgn(dot(d.roots[i].a, x)) < 0) return true;
    return false;
  };
  QVec x = scale(z0, Rational(-1));
  x[0] = -x[0];
  return strictly_outside(x) ? x : z0;
}

int cmd_cones(const RunConfig& cfg) {
  RealFormSpec spec;
  Json cache;
  const auto s = load(cfg, spec, cache);
  if (!s->hermitian) throw std::invalid_argument(spec.name() + " is not of Hermitian type");
  GroupActions act(s);
  const ConeReport r = cone_tests(act, cfg.samples, cfg.seed);
  const QVec x = point_outside_c_max(*s);
  const WitnessSearch w = cone_witness_search(act, x, 500, cfg.seed);
  Json j = header("cones", cfg, spec);
  j.update(cone_json(r, w));
  j["outside_point"] = vector_json(x);
  j["cache"] = cache;
  emit(j, cfg);
  if (!r.ok()) return kFailure;
  return w.found ? kOk : kInconclusive;
}

const std::vector<RealFormSpec>& selftest_algebras() {
  static const std::vector<RealFormSpec> all{RealFormSpec::su(1, 1), RealFormSpec::su(2, 1),   RealFormSpec::su(2, 2),
                                             RealFormSpec::sp(2),     RealFormSpec::sp(3),      RealFormSpec::so(2, 4),
                                             RealFormSpec::so_star(3), RealFormSpec::so(4, 1), RealFormSpec::so(5, 1)};
  return all;
}

int cmd_selftest(const RunConfig& cfg) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "selftest";
  j["seed"] = cfg.seed;
  bool ok = true;
  Json rows = Json::array();
  for (const auto& spec : selftest_algebras()) {
    const auto s = std::make_shared<const Structure>(build_structure(spec));
    const LieAlgebra& g = s->form->algebra();
    Json row{{"algebra", spec.name()}};
    const std::string checks[] = {g.check_antisymmetry(), g.check_jacobi(), g.check_involution(), g.check_killing_invariance()};
    const char* names[] = {"antisymmetry", "jacobi", "involution", "killing_invariance"};
    for (std::size_t i = 0; i < 4; ++i) {
      row[names[i]] = checks[i].empty() ? "ok" : checks[i];
      ok = ok && checks[i].empty();
    }

    const bool cached = identical(algebra_from_cache_json(Json::parse(algebra_cache_json(spec, g).dump())), g);
    row["cache_round_trip"] = cached;
    ok = ok && cached;

    if (s->cascade.exists_open_orbit) {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<int> coeff(-3, 3);
      std::size_t disagreements = 0, open = 0;
      const std::size_t trials = std::max<std::size_t>(cfg.samples, 1);
      for (std::size_t t = 0; t < trials; ++t) {
        QVec lambda(s->cascade.s.dim());
        for (auto& x : lambda) x = coeff(rng);
        const bool by_rank = is_open_orbit_point(s->cascade, lambda);
        const bool by_signature = cascade_signature(s->cascade, lambda).open;
        open += by_rank;
        disagreements += by_rank != by_signature;
      }
      row["openness_trials"] = trials;
      row["openness_open"] = open;
      row["openness_disagreements"] = disagreements;
      ok = ok && disagreements == 0;
    }
    rows.push_back(row);
  }
  j["algebras"] = rows;
  j["ok"] = ok;
  emit(j, cfg);
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure and coadjoint-orbit computations for classical real forms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    auto* fam = sub->add_option("--family", cfg.family, "su_pq | sp_2n_R | so_2n_star | so_p_q");
    auto* par = sub->add_option("--params", cfg.params, "comma separated, e.g. 2,1 for su(2,1) or 2 for sp(4,R)");
    if (needs_spec) {
      fam->required();
      par->required();
    }
    sub->add_option("--samples", cfg.samples, "sample budget")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    sub->add_option("--cache", cfg.cache, "structure-constant cache directory");
  };

  auto* algebra = app.add_subcommand("algebra", "structure report");
  add_common(algebra, true);
  auto* verify = app.add_subcommand("verify-theorem", "holomorphicity versus orbit signatures");
  add_common(verify, true);
  verify->add_option("--f", cfg.f, "covector as values on the compact Cartan basis, e.g. 2,1")->required();
  auto* mult = app.add_subcommand("multiplicity", "lowest K-type dimension chain");
  add_common(mult, true);
  mult->add_option("--lambda", cfg.lambda, "Harish-Chandra parameter on the compact Cartan basis")->required();
  mult->add_option("--mc-points", cfg.mc_points, "Monte Carlo points for the volume check (0 = off)");
  auto* cones = app.add_subcommand("cones", "invariant cone checks");
  add_common(cones, true);
  auto* selftest = app.add_subcommand("selftest", "structural invariants for all built-in algebras");
  add_common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (algebra->parsed()) return cmd_algebra(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (mult->parsed()) return cmd_multiplicity(cfg);
    if (cones->parsed()) return cmd_cones(cfg);
    if (selftest->parsed()) return cmd_selftest(cfg);
  } catch (const CacheMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInvalid;
  } catch (const DegenerateCovector& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInvalid;
}
