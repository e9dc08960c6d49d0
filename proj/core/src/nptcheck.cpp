#include "dss/nptcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dss/errors.hpp"
#include "dss/symspace.hpp"

namespace dss {

bool strictly_greater(double lhs, double rhs) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return lhs - rhs > kStrictnessTol * scale;
}

std::vector<bool> npt_conditions(const DssState& s) {
    const int n = s.n();
    std::vector<bool> conds(static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        const double lhs = static_cast<double>(k) * (n - k) * s.p(k) * s.p(k);
        const double rhs = static_cast<double>(k + 1) * (n - k + 1) *
                           s.p(k - 1) * s.p(k + 1);
        conds[static_cast<std::size_t>(k - 1)] = strictly_greater(lhs, rhs);
    }
    return conds;
}

std::vector<bool> closed_conditions(const DssState& s) {
    const int n = s.n();
    std::vector<bool> conds(static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        const double rhs = static_cast<double>(binomial(n, k)) *
                           std::pow(s.p(0), static_cast<double>(n - k) / n) *
                           std::pow(s.p(n), static_cast<double>(k) / n);
        conds[static_cast<std::size_t>(k - 1)] = strictly_greater(s.p(k), rhs);
    }
    return conds;
}

std::vector<double> pt_spectrum(const DssState& s) {
    const HermitianMatrix rho = embed_bipartite(s);
    const HermitianMatrix pt = partial_transpose_first(rho, 2, s.n());
    return eigh(pt).eigenvalues;
}

int negative_eigenvalue_count(const std::vector<double>& spectrum) {
    int count = 0;
    for (double w : spectrum) {
        if (w < kNegativeEigTol) ++count;
    }
    return count;
}

NptReport classify(const DssState& s) {
    NptReport report;
    report.conds_pt = npt_conditions(s);
    report.conds_closed = closed_conditions(s);
    report.pt_eigenvalues = pt_spectrum(s);
    report.negative_count = negative_eigenvalue_count(report.pt_eigenvalues);
    report.is_full_npt =
        std::all_of(report.conds_pt.begin(), report.conds_pt.end(),
                    [](bool c) { return c; });

    const int satisfied = static_cast<int>(
        std::count(report.conds_pt.begin(), report.conds_pt.end(), true));
    if (satisfied != report.negative_count) {
        throw InconsistencyError(
            "classify: " + std::to_string(satisfied) +
            " satisfied inequalities but " + std::to_string(report.negative_count) +
            " negative PT eigenvalues");
    }
    if (report.is_full_npt &&
        !std::all_of(report.conds_closed.begin(), report.conds_closed.end(),
                     [](bool c) { return c; })) {
        throw InconsistencyError(
            "classify: all PT inequalities hold but the closed-form family "
            "does not");
    }
    return report;
}

} // namespace dss
