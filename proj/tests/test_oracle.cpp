#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "dss/bsa.hpp"
#include "dss/errors.hpp"
#include "dss/oracle.hpp"
#include "dss/random_states.hpp"
#include "dss/simplex.hpp"
#include "dss/symspace.hpp"

namespace {

dss::DssState binomial_state(int n, double y) {
    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        p[static_cast<std::size_t>(k)] = static_cast<double>(dss::binomial(n, k)) *
                                         std::pow(1.0 - y, n - k) * std::pow(y, k);
    }
    return dss::DssState(n, std::move(p));
}

} // namespace

TEST_CASE("simplex solves small known programs") {
    // max x0 + x1  s.t. x0 <= 2, x1 <= 3, x0 + x1 <= 4
    const std::vector<double> c = {1.0, 1.0};
    const std::vector<double> a = {1.0, 0.0, 0.0, 1.0, 1.0, 1.0};
    const std::vector<double> b = {2.0, 3.0, 4.0};
    const dss::LpResult lp = dss::simplex_max(c, a, 3, 2, b);
    CHECK(lp.optimal);
    CHECK(lp.objective == doctest::Approx(4.0).epsilon(1e-12));

    // degenerate objective: all-zero costs stay at zero
    const std::vector<double> zero_c = {0.0, 0.0};
    CHECK(dss::simplex_max(zero_c, a, 3, 2, b).objective == 0.0);

    CHECK_THROWS_AS(
        dss::simplex_max(c, a, 3, 2, std::vector<double>{-1.0, 3.0, 4.0}),
        std::invalid_argument);
}

TEST_CASE("lower bound approaches the analytic weight from below") {
    const dss::DssState s3(3, {0.1, 0.4, 0.4, 0.1});
    const double lower3 = dss::oracle_lower_lp(s3, 2001);
    CHECK(std::abs(lower3 - 0.8) <= 2e-3);
    CHECK(lower3 <= 0.8 + 1e-9);

    const dss::DssState s2(2, {0.2, 0.6, 0.2});
    const double lower2 = dss::oracle_lower_lp(s2, 2001);
    CHECK(std::abs(lower2 - 0.8) <= 2e-3);
    CHECK(lower2 <= 0.8 + 1e-9);
}

TEST_CASE("a binomial state is fully subtractable") {
    // y = 1/4 lies on the interior grid when t_grid = 3
    const dss::DssState atom = binomial_state(3, 0.25);
    CHECK(dss::oracle_lower_lp(atom, 3) == doctest::Approx(1.0).epsilon(1e-9));

    // the pure endpoint state is itself an atom
    const dss::DssState pole(3, {1.0, 0.0, 0.0, 0.0});
    CHECK(dss::oracle_lower_lp(pole, 3) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lower bound is monotone over nested grids") {
    std::mt19937_64 rng(10001);
    for (int n : {2, 3, 4}) {
        const dss::DssState s = dss::sample_full_npt(n, rng);
        // t_grid -> 2*t_grid + 1 keeps every existing atom in the grid
        double previous = -1.0;
        for (int grid : {125, 251, 503, 1007}) {
            const double value = dss::oracle_lower_lp(s, grid);
            CHECK(value >= previous - 1e-12);
            previous = value;
        }
    }
}

TEST_CASE("upper bound saturates the geometric profile") {
    const dss::DssState s3(3, {0.1, 0.4, 0.4, 0.1});
    CHECK(std::abs(dss::oracle_upper_ppt(s3) - 0.8) <= 1e-6);

    const dss::DssState s2(2, {0.2, 0.6, 0.2});
    CHECK(std::abs(dss::oracle_upper_ppt(s2) - 0.8) <= 1e-6);

    // symmetric endpoints: closed form 2^N q
    const dss::DssState s4(4, {0.03, 0.25, 0.44, 0.25, 0.03});
    CHECK(std::abs(dss::oracle_upper_ppt(s4) - 16.0 * 0.03) <= 1e-6);

    CHECK_THROWS_AS(dss::oracle_upper_ppt(dss::DssState(2, {0.0, 0.6, 0.4})),
                    std::domain_error);
}

TEST_CASE("coordinate ascent recovers the optimum from perturbed starts") {
    std::mt19937_64 rng(10002);
    std::uniform_real_distribution<double> shrink(0.3, 0.9);
    for (int n = 2; n <= 6; ++n) {
        const dss::DssState s = dss::sample_full_npt(n, rng);
        const double expected = dss::compute_bsa(s).lambda;

        std::vector<double> start(static_cast<std::size_t>(n) + 1);
        start.front() = s.p(0);
        start.back() = s.p(n);
        for (int k = 1; k <= n - 1; ++k) {
            const double saturated =
                static_cast<double>(dss::binomial(n, k)) *
                std::pow(s.p(0), static_cast<double>(n - k) / n) *
                std::pow(s.p(n), static_cast<double>(k) / n);
            start[static_cast<std::size_t>(k)] = saturated * shrink(rng);
        }
        const double value = dss::ppt_coordinate_ascent(s, start);
        CHECK(std::abs(value - expected) <= 1e-6);
    }
}

TEST_CASE("bounds bracket the analytic value") {
    std::mt19937_64 rng(10003);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 6; ++trial) {
            const dss::DssState s = dss::sample_full_npt(n, rng);
            const dss::OracleReport report = dss::compare(s, 801);
            CHECK(report.lambda_lower <= report.lambda_upper + 1e-9);
            CHECK(report.lambda_lower <= report.lambda_analytic + 1e-9);
            CHECK(std::abs(report.lambda_analytic - report.lambda_upper) <= 1e-6);
        }
    }
}

TEST_CASE("compare on the worked examples") {
    const dss::OracleReport r3 = dss::compare(dss::DssState(3, {0.1, 0.4, 0.4, 0.1}), 2001);
    CHECK(r3.agrees);
    CHECK(std::abs(r3.lambda_analytic - 0.8) <= 1e-12);
    CHECK(std::abs(r3.lambda_upper - 0.8) <= 1e-6);
    CHECK(std::abs(r3.lambda_lower - 0.8) <= 2e-3);

    const dss::OracleReport r2 = dss::compare(dss::DssState(2, {0.2, 0.6, 0.2}), 2001);
    CHECK(r2.agrees);
    CHECK(std::abs(r2.lambda_upper - 0.8) <= 1e-6);

    CHECK_THROWS_AS(dss::compare(binomial_state(3, 0.5), 101), dss::NotFullNptError);
}
