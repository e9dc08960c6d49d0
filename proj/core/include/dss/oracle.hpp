#pragma once

#include "dss/state.hpp"

namespace dss {

/// Cross-check of the closed-form separable weight against two independent
/// numerical routes: a linear program over separable mixtures (lower bound)
/// and a positivity-constrained diagonal maximization (upper bound).
struct OracleReport {
    double lambda_analytic;
    double lambda_lower;
    double lambda_upper;
    double gap;    // lambda_upper - lambda_lower
    bool agrees;   // gap <= 5e-3 and |analytic - upper| <= 1e-6
};

/// Maximal total weight of a mixture of binomial diagonal profiles
/// a_k(t) = C(N,k) t^k (1-t)^{N-k} that fits under the state componentwise.
/// Every such profile is the Dicke diagonal of a phase-symmetrized product
/// mixture, so the optimum is a certified separable lower bound. The grid
/// holds t = alpha/(t_grid+1), alpha = 1..t_grid, plus the pure endpoint
/// atoms t = 0 and t = 1 (the |0..0> and |1..1> product states), which keeps
/// the bound tight for states dominated by either end.
double oracle_lower_lp(const DssState& s, int t_grid = 2001);

/// Maximizes sum_k s_k over diagonals with s_0 = p_0, s_N = p_N,
/// 0 <= s_k <= p_k, and the subtracted part positive under partial
/// transposition. Solved by the geometric saturation profile
/// s_k = C(N,k) p_0^{(N-k)/N} p_N^{k/N} refined by coordinate ascent, which
/// cannot improve on it when the state is full NPT. Throws std::domain_error
/// when p_0 or p_N vanishes.
double oracle_upper_ppt(const DssState& s);

/// Runs both oracles plus the analytic formula (requires full NPT).
OracleReport compare(const DssState& s, int t_grid = 2001);

/// Coordinate-ascent solver behind oracle_upper_ppt, exposed so tests can
/// start it from perturbed feasible points. `start` must have the exact
/// endpoint values; interior entries are refined in place.
double ppt_coordinate_ascent(const DssState& s, std::vector<double>& start);

constexpr double kOracleGapTol = 5e-3;
constexpr double kOracleUpperTol = 1e-6;

} // namespace dss
