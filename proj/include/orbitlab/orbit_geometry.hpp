// Coadjoint orbits: ellipticity and holomorphicity predicates, openness of
// AN-orbits, the cascade-elimination signature and the sampling drivers that
// compare them.
#pragma once

#include "orbitlab/group.hpp"
#include "orbitlab/structure.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitlab {

/// Either NotOpen (with the failing pivot, 1-based, or 0 for a structural
/// reason) or one sign per cascade root.
struct OrbitSignature {
  bool open = false;
  std::vector<int> signs;
  std::size_t pivot = 0;
  std::string reason;

  std::string to_string() const;  // "(+,-)" or "NotOpen(pivot 1)"
  friend bool operator==(const OrbitSignature& a, const OrbitSignature& b) {
    return a.open == b.open && a.signs == b.signs && a.pivot == b.pivot;
  }
};

enum class EliminationOrder { increasing, reversed };

/// Cascade elimination on lambda|n3 (lambda given on the a + n basis).
OrbitSignature cascade_signature(const CascadeData& c, const QVec& lambda, EliminationOrder order = EliminationOrder::increasing);

/// B(i, j) = lambda([e_i, e_j]) on a Lie algebra.
QMatrix kks_matrix(const LieAlgebra& s, const QVec& lambda);
/// Trivial stabilizer in a + n, i.e. rank B = dim(a + n).
bool is_open_orbit_point(const CascadeData& c, const QVec& lambda);

/// Restriction of a covector of g to a + n.
QVec project_p(const CascadeData& c, const QVec& f);
/// Values of f on the n3 vectors of the a + n basis.
QVec project_p1(const CascadeData& c, const QVec& f);
/// Orthogonal projection onto `target` for <X, Y> = -K(X, theta Y).
QVec orthogonal_projection(const Subspace& target, const QVec& x);
/// p1(f) computed directly and through <., pr_n3(X_f)>; true iff equal.
bool projection_diagram_commutes(const CascadeData& c, const QVec& f);

/// The extension of lambda on a + n to g that vanishes on its orthogonal
/// complement.
QVec extend_from_s(const CascadeData& c, const QVec& lambda);
/// w . lambda for an AN-word w acting on (a + n)*.
QVec an_coadjoint(const GroupActions& act, const GroupWord& w, const QVec& lambda);

bool is_strongly_elliptic(const AlgebraPtr& g, const QVec& f);

/// Covector -K(X_f, .) of g for the functional f_t on t (values on the t basis).
QVec covector_from_t(const Structure& s, const QVec& f_t);
/// Values of f on the t basis.
QVec restrict_to_t(const Structure& s, const QVec& f);

/// Raised by the holomorphicity test when f vanishes on a noncompact root.
class DegenerateCovector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct HolomorphicityResult {
  bool holomorphic = false;
  std::vector<std::size_t> delta_n_plus;  // {alpha noncompact : (f_t, alpha) > 0}
  bool bracket_closed = false;
  bool wk_stable = false;
};
/// Throws std::invalid_argument if f is not strongly elliptic, std::domain_error
/// if t is not inside the stabilizer, DegenerateCovector on a noncompact root
/// with (f_t, alpha) = 0, and std::logic_error if the two criteria disagree.
HolomorphicityResult holomorphicity(const Structure& s, const QVec& f);
bool is_holomorphic(const Structure& s, const QVec& f);

/// Sample `index` of the orbit sampler; index 0 is the identity.
GroupWord sample_word(const GroupActions& act, std::uint64_t seed, std::uint64_t index);
QVec sample_orbit_point(const GroupActions& act, const QVec& f, std::uint64_t seed, std::uint64_t index);
/// Double-precision sample built from exponentials of random elements of g.
/// For exploration only; no verdict uses it.  Ad-invariants of f are kept to
/// about 1e-9 relative error.
std::vector<double> sample_orbit_point_float(const GroupActions& act, const QVec& f, std::uint64_t seed,
                                             std::uint64_t index);

struct SignatureWitness {
  std::size_t sample = 0;
  std::string signature;
};

struct SignatureVerdict {
  std::string verdict;  // CONSISTENT-HOLOMORPHIC, CONSISTENT-NONHOLOMORPHIC, NO-OPEN-ORBIT, INCONCLUSIVE, INCONSISTENT
  bool holomorphic = false;
  bool exists_open_orbit = false;
  std::size_t n_samples = 0;     // budget
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> signatures_histogram;
  std::vector<SignatureWitness> witnesses;
  std::vector<std::string> failures;  // hard invariant violations
  std::vector<std::size_t> delta_n_plus;
};
/// Compares holomorphicity of f with the signatures of sampled projections.
SignatureVerdict verify_holomorphic_signatures(const GroupActions& act, const QVec& f, std::size_t n_samples, std::uint64_t seed);

/// Random X in c_max = {X in t : (alpha, X) > 0 for alpha in delta_n_plus}, t-coordinates.
QVec sample_c_max(const Structure& s, std::mt19937_64& rng);
/// Ad(exp theta Z) sum c_j X_j with Z in n_c and c_j > 0.
QVec sample_omega_plus(const GroupActions& act, std::mt19937_64& rng);

struct ConeReport {
  std::size_t pairs = 0;
  std::size_t c_max_positive = 0;      // <Ad(g)X, Ad(g')X_1> > 0
  std::size_t projection_all_plus = 0; // signature of <Ad(g)X, .> on a + n
  std::size_t omega_in_n3 = 0;
  std::size_t omega_all_plus = 0;
  std::size_t omega_pairing_positive = 0;  // <Ad(g)X, Omega> > 0
  std::size_t omega_self_dual = 0;         // <Omega, Omega'> > 0
  std::size_t an_translate_identity = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ConeReport cone_tests(const GroupActions& act, std::size_t n_samples, std::uint64_t seed);

struct WitnessSearch {
  bool found = false;
  std::size_t attempts = 0;
  std::string detail;
  std::string status() const { return found ? "FOUND" : "UNRESOLVED"; }
};
/// For X outside c_max (t-coordinates): look for g, g' with
/// <Ad(g)X, Ad(g')X_1> <= 0.
WitnessSearch cone_witness_search(const GroupActions& act, const QVec& x_t, std::size_t budget, std::uint64_t seed);

struct X1SignReport {
  std::vector<int> signs;
  std::size_t samples = 0;
  bool x1_sign_constant = true;
  std::optional<std::size_t> first_x1_flip;
  std::optional<std::size_t> x2_flip;  // sample index of a sign change on X_2
};
/// Signs of (w . s)(X_1) and (w . s)(X_2) over exact AN-words w.
X1SignReport x1_sign_check(const GroupActions& act, const CanonicalRep& rep, std::size_t n_samples, std::uint64_t seed);

struct KostantHullReport {
  QVec beta;
  std::vector<QVec> orbit;  // W_K . beta
  std::vector<std::pair<QVec, bool>> members;
  QVec orbit_sum;
  bool orbit_sum_fixed = false;
  bool all_inside() const;
};
KostantHullReport kostant_hull_check(const Structure& s);

}  // namespace orbitlab
