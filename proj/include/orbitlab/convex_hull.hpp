// Exact convex-hull membership by a phase-1 simplex over the rationals.
#pragma once

#include "orbitlab/exact.hpp"

#include <optional>
#include <vector>

namespace orbitlab {

/// Feasibility of { x >= 0 : A x = b } decided exactly (Bland's rule, so no
/// cycling).  Returns a feasible point when one exists.
std::optional<QVec> feasible_point(const QMatrix& a, const QVec& b);

/// True iff y = sum c_i v_i with c_i >= 0 and sum c_i = 1.
bool in_convex_hull(const QVec& y, const std::vector<QVec>& generators);

/// The convex weights witnessing membership (nullopt when y is outside).
std::optional<QVec> convex_weights(const QVec& y, const std::vector<QVec>& generators);

}  // namespace orbitlab
