#pragma once

#include <span>
#include <vector>

namespace dss {

struct LpResult {
    double objective = 0.0;
    std::vector<double> solution;
    int iterations = 0;
    bool optimal = false;
};

/// Solves  max c.w  subject to  A w <= b, w >= 0  with b >= 0, by the primal
/// simplex method on a dense tableau. The nonnegative right-hand side makes
/// the slack basis feasible, so no phase-1 is needed. `a` is row-major with
/// `rows` constraints and `cols` variables. Reduced costs below 1e-9 count
/// as optimal; Bland's rule kicks in after a pivot budget to rule out cycling.
LpResult simplex_max(std::span<const double> c, std::span<const double> a,
                     int rows, int cols, std::span<const double> b);

} // namespace dss
