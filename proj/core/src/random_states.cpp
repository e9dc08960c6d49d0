#include "dss/random_states.hpp"

#include <cmath>
#include <vector>

#include "dss/symspace.hpp"

namespace dss {

DssState sample_dss(int n, std::mt19937_64& rng) {
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    double sum = 0.0;
    for (double& pk : p) {
        pk = exp1(rng);
        sum += pk;
    }
    for (double& pk : p) pk /= sum;
    return DssState(n, std::move(p));
}

DssState sample_full_npt(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> slope_start(-0.2, 0.8);
    std::uniform_real_distribution<double> gap(0.02, 0.4);

    // log(p_k / C(N,k)) walks with strictly decreasing increments
    std::vector<double> logr(static_cast<std::size_t>(n) + 1, 0.0);
    double increment = slope_start(rng);
    for (int k = 1; k <= n; ++k) {
        logr[static_cast<std::size_t>(k)] =
            logr[static_cast<std::size_t>(k - 1)] + increment;
        increment -= gap(rng);
    }

    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        p[static_cast<std::size_t>(k)] = static_cast<double>(binomial(n, k)) *
                                         std::exp(logr[static_cast<std::size_t>(k)]);
        sum += p[static_cast<std::size_t>(k)];
    }
    for (double& pk : p) pk /= sum;
    return DssState(n, std::move(p), /*strict=*/true);
}

} // namespace dss
