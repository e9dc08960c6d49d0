#include "dss/bsa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dss/errors.hpp"
#include "dss/nptcheck.hpp"
#include "dss/symspace.hpp"

namespace dss {

namespace {

constexpr double kRangeTol = 1e-8;
constexpr double kPinvRankTol = 1e-10;

double norm2(std::span<const cdouble> v) {
    double acc = 0.0;
    for (const cdouble& c : v) acc += std::norm(c);
    return std::sqrt(acc);
}

// Dicke-basis matrix diag(q) + sum of weighted projectors onto the given
// vectors. All lemma verifications work in this (N+1)-dimensional basis.
HermitianMatrix diag_plus_projectors(std::span<const double> q,
                                     const std::vector<cvector>& vectors,
                                     double weight) {
    const int d = static_cast<int>(q.size());
    HermitianMatrix m(d);
    for (int k = 0; k < d; ++k) m.set(k, k, cdouble{q[static_cast<std::size_t>(k)], 0.0});
    for (const cvector& v : vectors) m.add_scaled_outer(v, weight);
    return m;
}

cdouble inner(std::span<const cdouble> a, std::span<const cdouble> b) {
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

// <a| M |b>
cdouble sandwich(std::span<const cdouble> a, const HermitianMatrix& m,
                 std::span<const cdouble> b) {
    return inner(a, m.apply(b));
}

void require_in_range(const HermitianMatrix& m, const HermitianMatrix& pinv,
                      std::span<const cdouble> v, const std::string& who) {
    const cvector projected = m.apply(pinv.apply(v));
    double err = 0.0;
    for (std::size_t i = 0; i < projected.size(); ++i) {
        err = std::max(err, std::abs(projected[i] - v[i]));
    }
    if (err > kRangeTol * std::max(1.0, norm2(v))) {
        throw InconsistencyError(who + ": vector left the range of the reduced "
                                 "state (residual " + std::to_string(err) + ")");
    }
}

} // namespace

ProductVectorSpec::ProductVectorSpec(int n_, double x_, double y_, double phase_)
    : n(n_), x(x_), y(y_), phase(phase_) {
    if (n < 2) throw std::invalid_argument("ProductVectorSpec: n must be >= 2");
    if (x == 0.0 && y == 0.0) {
        throw std::invalid_argument("ProductVectorSpec: (x, y) must not both vanish");
    }
    if (x < 0.0 || y < 0.0) {
        throw std::invalid_argument("ProductVectorSpec: x and y must be >= 0");
    }
}

ProductVectorSpec ProductVectorSpec::from_phase_index(int n_, double x_, double y_,
                                                      int m) {
    if (m < 0 || m >= 2 * n_) {
        throw std::invalid_argument("ProductVectorSpec: phase index out of range");
    }
    return ProductVectorSpec(n_, x_, y_, m * std::numbers::pi / n_);
}

cvector product_vector(const ProductVectorSpec& spec) {
    const int n = spec.n;
    cvector b(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const double mag = std::sqrt(static_cast<double>(binomial(n, k))) *
                           std::pow(spec.x, n - k) * std::pow(spec.y, k);
        const double arg = spec.phase * (n - k);
        b[static_cast<std::size_t>(k)] = std::polar(mag, arg);
    }
    return b;
}

std::vector<cvector> phase_family(int n, double x, double y) {
    std::vector<cvector> family;
    family.reserve(static_cast<std::size_t>(2 * n));
    for (int m = 0; m < 2 * n; ++m) {
        family.push_back(product_vector(ProductVectorSpec::from_phase_index(n, x, y, m)));
    }
    return family;
}

std::vector<double> separable_diagonal(int n, double x, double y) {
    if (x == 0.0 && y == 0.0) {
        throw std::invalid_argument("separable_diagonal: (x, y) must not both vanish");
    }
    std::vector<double> diag(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        diag[static_cast<std::size_t>(k)] = static_cast<double>(binomial(n, k)) *
                                            std::pow(x, 2 * (n - k)) *
                                            std::pow(y, 2 * k);
    }
    return diag;
}

double subtraction_weight(const DssState& s, std::span<const cdouble> b) {
    const int n = s.n();
    if (b.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("subtraction_weight: vector length mismatch");
    }
    double bmax = 0.0;
    for (const cdouble& c : b) bmax = std::max(bmax, std::abs(c));
    if (bmax == 0.0) {
        throw std::invalid_argument("subtraction_weight: zero vector");
    }
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double bk = std::abs(b[static_cast<std::size_t>(k)]);
        if (s.p(k) <= 0.0) {
            if (bk > 1e-12 * bmax) return 0.0; // outside the range of the state
            continue;
        }
        acc += bk * bk / s.p(k);
    }
    return 1.0 / acc;
}

BsaResult compute_bsa(const DssState& s) {
    const int n = s.n();
    for (int k = 0; k <= n; ++k) {
        if (s.p(k) <= 0.0) {
            throw RankDeficientError(
                k, "compute_bsa: p[" + std::to_string(k) +
                       "] = 0; the closed form requires full rank");
        }
    }
    const std::vector<bool> conds = npt_conditions(s);
    for (int k = 1; k <= n - 1; ++k) {
        if (!conds[static_cast<std::size_t>(k - 1)]) {
            throw NotFullNptError(
                k, "compute_bsa: inequality k=" + std::to_string(k) +
                       " fails; the state is not full NPT and the analytic "
                       "formula does not apply");
        }
    }

    const double p0 = s.p(0);
    const double pn = s.p(n);
    BsaResult result;
    result.x = std::pow(p0, 1.0 / (2 * n));
    result.y = std::pow(pn, 1.0 / (2 * n));
    result.weight_per_projector = 1.0 / (2 * n);

    result.bsa_diag.assign(static_cast<std::size_t>(n) + 1, 0.0);
    result.bsa_diag.front() = p0; // endpoints taken verbatim so q_0 = q_N = 0 exactly
    result.bsa_diag.back() = pn;
    for (int k = 1; k <= n - 1; ++k) {
        result.bsa_diag[static_cast<std::size_t>(k)] =
            static_cast<double>(binomial(n, k)) *
            std::pow(p0, static_cast<double>(n - k) / n) *
            std::pow(pn, static_cast<double>(k) / n);
    }

    result.remainder_diag.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n - 1; ++k) {
        const double qk = s.p(k) - result.bsa_diag[static_cast<std::size_t>(k)];
        if (qk <= 0.0) {
            throw InconsistencyError(
                "compute_bsa: remainder coefficient q[" + std::to_string(k) +
                "] = " + std::to_string(qk) + " not positive for a full-NPT state");
        }
        result.remainder_diag[static_cast<std::size_t>(k)] = qk;
    }

    result.lambda =
        std::pow(std::pow(p0, 1.0 / n) + std::pow(pn, 1.0 / n), n);
    if (!(result.lambda < 1.0)) {
        throw InconsistencyError("compute_bsa: separable weight " +
                                 std::to_string(result.lambda) +
                                 " >= 1 for a full-NPT state");
    }
    return result;
}

LemmaReport verify_single_maximality(const DssState& s, int m, double tol) {
    const int n = s.n();
    if (m < 0 || m >= 2 * n) {
        throw std::invalid_argument("verify_single_maximality: m out of range");
    }
    const BsaResult bsa = compute_bsa(s);
    const cvector bm =
        product_vector(ProductVectorSpec::from_phase_index(n, bsa.x, bsa.y, m));
    const HermitianMatrix rho_m =
        diag_plus_projectors(bsa.remainder_diag, {bm}, bsa.weight_per_projector);
    const HermitianMatrix pinv = pseudoinverse(rho_m, kPinvRankTol);
    require_in_range(rho_m, pinv, bm, "verify_single_maximality");

    const cdouble quantity = sandwich(bm, pinv, bm);
    const double expected = 2.0 * n;
    LemmaReport report;
    report.quantity = quantity.real();
    report.expected = expected;
    report.deviation = std::abs(quantity - expected);
    report.passed = report.deviation <= tol;
    return report;
}

LemmaReport verify_pair_maximality(const DssState& s, int m, int l, double tol) {
    const int n = s.n();
    if (m < 0 || m >= 2 * n || l < 0 || l >= 2 * n) {
        throw std::invalid_argument("verify_pair_maximality: index out of range");
    }
    if (m == l) {
        throw std::invalid_argument("verify_pair_maximality: m and l must differ");
    }
    const BsaResult bsa = compute_bsa(s);
    const cvector bm =
        product_vector(ProductVectorSpec::from_phase_index(n, bsa.x, bsa.y, m));
    const cvector bl =
        product_vector(ProductVectorSpec::from_phase_index(n, bsa.x, bsa.y, l));
    const HermitianMatrix rho_ml = diag_plus_projectors(
        bsa.remainder_diag, {bm, bl}, bsa.weight_per_projector);
    const HermitianMatrix pinv = pseudoinverse(rho_ml, kPinvRankTol);
    require_in_range(rho_ml, pinv, bm, "verify_pair_maximality");
    require_in_range(rho_ml, pinv, bl, "verify_pair_maximality");

    const double expected = 2.0 * n;
    LemmaReport report;
    report.expected = expected;

    if ((m - l) % 2 != 0) {
        // odd separation: the pair behaves like orthogonal directions of the
        // reduced state, <p_i| rho_ml^+ |p_j> = 2N delta_ij
        const cdouble gmm = sandwich(bm, pinv, bm);
        const cdouble gll = sandwich(bl, pinv, bl);
        const cdouble gml = sandwich(bm, pinv, bl);
        const cdouble glm = sandwich(bl, pinv, bm);
        report.quantity = gmm.real();
        report.deviation = std::max({std::abs(gmm - expected),
                                     std::abs(gll - expected), std::abs(gml),
                                     std::abs(glm)});
    } else {
        // even separation: cross term does not vanish; the sum identity and
        // the pairwise weight A/B = 1/(2N) must both hold
        const cdouble gmm = sandwich(bm, pinv, bm);
        const cdouble gll = sandwich(bl, pinv, bl);
        const cdouble glm = sandwich(bl, pinv, bm);
        const cdouble sum = gmm + glm;
        const double cross = std::abs(glm);
        const double numerator = gll.real() - cross;
        const double denominator = gmm.real() * gll.real() - cross * cross;
        const double weight = numerator / denominator;
        report.quantity = sum.real();
        report.deviation = std::max(std::abs(sum - expected),
                                    std::abs(weight - 1.0 / (2.0 * n)));
    }
    report.passed = report.deviation <= tol;
    return report;
}

bool verify_remainder_entangled(const DssState& s, int grid_points,
                                double epsilon) {
    if (grid_points < 2) {
        throw std::invalid_argument("verify_remainder_entangled: grid too small");
    }
    if (epsilon <= 0.0) {
        throw std::invalid_argument("verify_remainder_entangled: epsilon must be > 0");
    }
    const int n = s.n();
    const BsaResult bsa = compute_bsa(s);
    const double q0 = bsa.remainder_diag.front();
    const double qn = bsa.remainder_diag.back();

    for (int i = 0; i < grid_points; ++i) {
        const double x = static_cast<double>(i) / (grid_points - 1);
        const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
        for (int j = 0; j < grid_points; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / grid_points;
            const cvector b = product_vector(ProductVectorSpec(n, x, y, phi));
            const double head = q0 - epsilon * std::norm(b.front());
            const double tail = qn - epsilon * std::norm(b.back());
            if (!(head < 0.0 || tail < 0.0)) return false;
        }
    }
    return true;
}

} // namespace dss
