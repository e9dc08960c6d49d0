#include "dss/symspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dss {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("binomial: k=" + std::to_string(k) +
                                " out of range for n=" + std::to_string(n));
    }
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n-k+i) stays divisible by i at every step
        const auto factor = static_cast<std::uint64_t>(n - k + i);
        const unsigned __int128 wide = static_cast<unsigned __int128>(result) * factor;
        if (wide / i > static_cast<unsigned __int128>(UINT64_MAX)) {
            throw std::overflow_error("binomial: C(" + std::to_string(n) + "," +
                                      std::to_string(k) + ") exceeds 64 bits");
        }
        result = static_cast<std::uint64_t>(wide / static_cast<unsigned>(i));
    }
    return result;
}

HermitianMatrix embed_dicke_diagonal(int n, std::span<const double> coeffs) {
    if (n < 2) throw std::invalid_argument("embed_dicke_diagonal: n must be >= 2");
    if (coeffs.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("embed_dicke_diagonal: need n+1 coefficients");
    }
    const int dim = 2 * n;
    HermitianMatrix rho(dim);
    cvector dk(static_cast<std::size_t>(dim));
    for (int k = 0; k <= n; ++k) {
        const double c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0.0) continue;
        std::fill(dk.begin(), dk.end(), cdouble{0.0, 0.0});
        const double a = std::sqrt(static_cast<double>(n - k) / n);
        const double b = std::sqrt(static_cast<double>(k) / n);
        if (k <= n - 1) dk[static_cast<std::size_t>(k)] = cdouble{a, 0.0};
        if (k >= 1) dk[static_cast<std::size_t>(n + k - 1)] = cdouble{b, 0.0};
        rho.add_scaled_outer(dk, c);
    }
    return rho;
}

HermitianMatrix embed_bipartite(const DssState& s) {
    return embed_dicke_diagonal(s.n(), s.probabilities());
}

} // namespace dss
