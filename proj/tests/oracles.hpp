// Reference computations that do not go through the library's algorithms:
// plain matrix arithmetic, trace forms, hand tables and pattern counting.
#pragma once

#include "orbitlab/real_forms.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using QMat = std::vector<std::vector<Q>>;

/// Complex rational matrix as separate real and imaginary parts.
struct ZMat {
  QMat re, im;
};

ZMat from_library(const orbitlab::CMatrix& m);
ZMat commutator(const ZMat& a, const ZMat& b);
ZMat add_scaled(ZMat acc, const ZMat& m, const Q& c);
bool equal(const ZMat& a, const ZMat& b);
/// Re tr(AB).
Q real_trace_product(const ZMat& a, const ZMat& b);

/// First (i, j) with [M_i, M_j] != sum_k c_ijk M_k, or "" when the table
/// reproduces every matrix commutator.
std::string commutator_table_mismatch(const orbitlab::RealForm& rf);

/// c with K(X, Y) = c Re tr(XY) in the defining representation.
Q killing_trace_factor(const orbitlab::RealFormSpec& spec);

/// Classical real rank.
std::size_t real_rank(const orbitlab::RealFormSpec& spec);
/// Classical dimensions of g and of the maximal compact k.
std::size_t dim_g(const orbitlab::RealFormSpec& spec);
std::size_t dim_k(const orbitlab::RealFormSpec& spec);
/// Multiplicities of the positive restricted roots, sorted ascending.
std::vector<std::size_t> positive_root_multiplicities(const orbitlab::RealFormSpec& spec);
/// Length of a maximal strongly orthogonal sequence for the Hermitian
/// families (the rank of the associated symmetric cone).
std::size_t cascade_length(const orbitlab::RealFormSpec& spec);
/// |W_K| for the compact subgroups of the Hermitian families in scope.
std::size_t compact_weyl_order(const orbitlab::RealFormSpec& spec);

/// Number of Gelfand-Tsetlin patterns with top row m (non-increasing).
std::size_t gelfand_tsetlin_count(const std::vector<long>& top);

/// Coefficients of det(xI - A), leading coefficient first (Faddeev-LeVerrier).
std::vector<Q> characteristic_polynomial(const QMat& a);
/// Counts of positive and negative eigenvalues of a symmetric matrix, through
/// Descartes' rule on its characteristic polynomial.
std::pair<std::size_t, std::size_t> inertia(const QMat& sym);

}  // namespace oracle
