#pragma once

#include <vector>

#include "dss/state.hpp"

namespace dss {

/// Full classification of a DSS state under partial transposition.
struct NptReport {
    std::vector<bool> conds_pt;     // inequality family on consecutive triples, k=1..N-1
    std::vector<bool> conds_closed; // closed-form family against p_0, p_N, k=1..N-1
    std::vector<double> pt_eigenvalues; // ascending, length 2N
    int negative_count = 0;
    bool is_full_npt = false;
};

/// Strict-inequality test with the fixed relative threshold used everywhere
/// in the classification: lhs - rhs > 1e-12 * max(1, |lhs|, |rhs|). Boundary
/// (binomial-profile) states therefore classify as non-strict deterministically.
bool strictly_greater(double lhs, double rhs);

/// Entry k-1 is true iff  k(N-k) p_k^2 > (k+1)(N-k+1) p_{k-1} p_{k+1}
/// holds strictly, for k = 1..N-1. Each satisfied condition corresponds to
/// one negative eigenvalue of the partial transpose.
std::vector<bool> npt_conditions(const DssState& s);

/// Entry k-1 is true iff  p_k > C(N,k) p_0^{(N-k)/N} p_N^{k/N}  strictly.
/// When all npt_conditions hold, all of these hold as well (the converse is
/// not asserted).
std::vector<bool> closed_conditions(const DssState& s);

/// Ascending spectrum of the partial transpose (taken on the qubit factor of
/// the 2 (x) N embedding). Sums to 1.
std::vector<double> pt_spectrum(const DssState& s);

/// Counts entries < -1e-12 of pt_spectrum.
int negative_eigenvalue_count(const std::vector<double>& spectrum);

/// Assembles the full report and cross-checks that the negative-eigenvalue
/// count equals the number of satisfied inequalities, and that all-satisfied
/// implies the closed family holds. A mismatch throws InconsistencyError:
/// it signals a numerical tolerance failure and is never silently ignored.
NptReport classify(const DssState& s);

constexpr double kStrictnessTol = 1e-12;
constexpr double kNegativeEigTol = -1e-12;

} // namespace dss
