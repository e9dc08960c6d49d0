#include "dss/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dss {

namespace {
constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
} // namespace

LpResult simplex_max(std::span<const double> c, std::span<const double> a,
                     int rows, int cols, std::span<const double> b) {
    if (c.size() != static_cast<std::size_t>(cols) ||
        b.size() != static_cast<std::size_t>(rows) ||
        a.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("simplex_max: shape mismatch");
    }
    for (double bi : b) {
        if (bi < 0.0) throw std::invalid_argument("simplex_max: b must be >= 0");
    }

    // Tableau: rows constraints x (cols structural + rows slack + rhs),
    // plus an objective row holding negated reduced costs.
    const int width = cols + rows + 1;
    const int rhs = cols + rows;
    std::vector<double> t(static_cast<std::size_t>(rows + 1) * width, 0.0);
    auto at = [&](int i, int j) -> double& {
        return t[static_cast<std::size_t>(i) * width + j];
    };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) at(i, j) = a[static_cast<std::size_t>(i) * cols + j];
        at(i, cols + i) = 1.0;
        at(i, rhs) = b[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < cols; ++j) at(rows, j) = -c[static_cast<std::size_t>(j)];

    std::vector<int> basis(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = cols + i;

    LpResult result;
    const int bland_after = 40 * (rows + cols);
    const int max_iterations = 200 * (rows + cols) + 10000;

    while (true) {
        // entering column: most negative objective coefficient (Dantzig),
        // or lowest index once the pivot budget is spent (Bland)
        int enter = -1;
        if (result.iterations < bland_after) {
            double best = -kReducedCostTol;
            for (int j = 0; j < cols + rows; ++j) {
                if (at(rows, j) < best) {
                    best = at(rows, j);
                    enter = j;
                }
            }
        } else {
            for (int j = 0; j < cols + rows; ++j) {
                if (at(rows, j) < -kReducedCostTol) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter < 0) {
            result.optimal = true;
            break;
        }

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < rows; ++i) {
            const double aij = at(i, enter);
            if (aij > kPivotTol) {
                const double ratio = at(i, rhs) / aij;
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 && leave >= 0 &&
                     basis[static_cast<std::size_t>(i)] <
                         basis[static_cast<std::size_t>(leave)])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) {
            // unbounded; cannot happen for the bounded programs built here
            throw std::runtime_error("simplex_max: objective unbounded");
        }

        const double pivot = at(leave, enter);
        for (int j = 0; j < width; ++j) at(leave, j) /= pivot;
        for (int i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            const double factor = at(i, enter);
            if (factor == 0.0) continue;
            for (int j = 0; j < width; ++j) at(i, j) -= factor * at(leave, j);
        }
        basis[static_cast<std::size_t>(leave)] = enter;

        if (++result.iterations > max_iterations) {
            throw std::runtime_error("simplex_max: iteration budget exceeded");
        }
    }

    result.solution.assign(static_cast<std::size_t>(cols), 0.0);
    for (int i = 0; i < rows; ++i) {
        const int var = basis[static_cast<std::size_t>(i)];
        if (var < cols) result.solution[static_cast<std::size_t>(var)] = at(i, rhs);
    }
    result.objective = 0.0;
    for (int j = 0; j < cols; ++j) {
        result.objective += c[static_cast<std::size_t>(j)] *
                            result.solution[static_cast<std::size_t>(j)];
    }
    return result;
}

} // namespace dss
