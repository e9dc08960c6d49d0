#include "dss/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dss {

DssState::DssState(int n, std::vector<double> p, bool strict)
    : n_(n), p_(std::move(p)) {
    if (n_ < 2) {
        throw std::invalid_argument("DssState: qubit count must be >= 2, got " +
                                    std::to_string(n_));
    }
    if (p_.size() != static_cast<std::size_t>(n_) + 1) {
        throw std::invalid_argument(
            "DssState: expected " + std::to_string(n_ + 1) +
            " probabilities, got " + std::to_string(p_.size()));
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < p_.size(); ++k) {
        double& pk = p_[k];
        if (std::isnan(pk) || pk < -1e-12 || pk > 1.0 + 1e-12) {
            throw std::invalid_argument("DssState: p[" + std::to_string(k) +
                                        "] = " + std::to_string(pk) +
                                        " outside [0,1]");
        }
        if (pk < 0.0) pk = 0.0; // clamp rounding dust
        sum += pk;
    }
    if (std::abs(sum - 1.0) > kNormalizationDriftTol) {
        throw std::invalid_argument("DssState: probabilities sum to " +
                                    std::to_string(sum) + ", expected 1");
    }
    for (double& pk : p_) pk /= sum;
    if (strict && !strictly_positive()) {
        throw std::invalid_argument(
            "DssState: strict mode requires every p_k > 0");
    }
}

bool DssState::strictly_positive() const noexcept {
    for (double pk : p_) {
        if (pk <= 0.0) return false;
    }
    return true;
}

} // namespace dss
