#include "dss/oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dss/bsa.hpp"
#include "dss/simplex.hpp"
#include "dss/symspace.hpp"

namespace dss {

namespace {

// a_k(t) = C(N,k) t^k (1-t)^{N-k}
std::vector<double> binomial_profile(int n, double t) {
    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        a[static_cast<std::size_t>(k)] = static_cast<double>(binomial(n, k)) *
                                         std::pow(t, k) *
                                         std::pow(1.0 - t, n - k);
    }
    return a;
}

} // namespace

double oracle_lower_lp(const DssState& s, int t_grid) {
    if (t_grid < 1) throw std::invalid_argument("oracle_lower_lp: t_grid must be >= 1");
    const int n = s.n();
    const int rows = n + 1;
    const int cols = t_grid + 2; // interior grid plus the two endpoint atoms

    std::vector<double> a(static_cast<std::size_t>(rows) * cols, 0.0);
    for (int alpha = 0; alpha < cols; ++alpha) {
        double t;
        if (alpha == 0) {
            t = 0.0;
        } else if (alpha == cols - 1) {
            t = 1.0;
        } else {
            t = static_cast<double>(alpha) / (t_grid + 1);
        }
        const std::vector<double> profile = binomial_profile(n, t);
        for (int k = 0; k < rows; ++k) {
            a[static_cast<std::size_t>(k) * cols + alpha] =
                profile[static_cast<std::size_t>(k)];
        }
    }

    const std::vector<double> c(static_cast<std::size_t>(cols), 1.0);
    const LpResult lp = simplex_max(c, a, rows, cols, s.probabilities());
    return lp.objective;
}

double ppt_coordinate_ascent(const DssState& s, std::vector<double>& start) {
    const int n = s.n();
    if (start.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("ppt_coordinate_ascent: length mismatch");
    }
    // Each sweep replaces s_k by the largest value allowed by its cap and its
    // own positivity constraint given the current neighbors. The update is
    // monotone toward the componentwise-maximal feasible point.
    constexpr int kMaxSweeps = 20000;
    constexpr double kSweepTol = 1e-14;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double delta = 0.0;
        for (int k = 1; k <= n - 1; ++k) {
            const double geometric = std::sqrt(
                static_cast<double>(k + 1) * (n - k + 1) *
                start[static_cast<std::size_t>(k - 1)] *
                start[static_cast<std::size_t>(k + 1)] /
                (static_cast<double>(k) * (n - k)));
            const double updated = std::min(s.p(k), geometric);
            delta = std::max(delta,
                             std::abs(updated - start[static_cast<std::size_t>(k)]));
            start[static_cast<std::size_t>(k)] = updated;
        }
        if (delta <= kSweepTol) break;
    }
    return std::accumulate(start.begin(), start.end(), 0.0);
}

double oracle_upper_ppt(const DssState& s) {
    const int n = s.n();
    if (s.p(0) <= 0.0 || s.p(n) <= 0.0) {
        throw std::domain_error(
            "oracle_upper_ppt: p_0 and p_N must be strictly positive");
    }
    std::vector<double> diag(static_cast<std::size_t>(n) + 1);
    diag.front() = s.p(0);
    diag.back() = s.p(n);
    for (int k = 1; k <= n - 1; ++k) {
        const double saturated = static_cast<double>(binomial(n, k)) *
                                 std::pow(s.p(0), static_cast<double>(n - k) / n) *
                                 std::pow(s.p(n), static_cast<double>(k) / n);
        diag[static_cast<std::size_t>(k)] = std::min(s.p(k), saturated);
    }
    return ppt_coordinate_ascent(s, diag);
}

OracleReport compare(const DssState& s, int t_grid) {
    const BsaResult bsa = compute_bsa(s); // rejects non-full-NPT input
    OracleReport report;
    report.lambda_analytic = bsa.lambda;
    report.lambda_lower = oracle_lower_lp(s, t_grid);
    report.lambda_upper = oracle_upper_ppt(s);
    report.gap = report.lambda_upper - report.lambda_lower;
    report.agrees =
        report.gap <= kOracleGapTol &&
        std::abs(report.lambda_analytic - report.lambda_upper) <= kOracleUpperTol;
    return report;
}

} // namespace dss
