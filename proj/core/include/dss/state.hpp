#pragma once

#include <vector>

namespace dss {

/// An N-qubit state diagonal in the Dicke basis, stored as the (N+1)-length
/// probability vector p_0..p_N. This is the canonical representation used
/// throughout the library; the 2N-dimensional bipartite embedding is
/// materialized on demand (see symspace.hpp).
class DssState {
public:
    /// Validates and stores the probabilities. A total-probability drift of
    /// up to 1e-9 is renormalized away (tolerates file-I/O rounding); larger
    /// deviation throws std::invalid_argument. With strict=true every p_k
    /// must be positive (full rank).
    DssState(int n, std::vector<double> p, bool strict = false);

    int n() const noexcept { return n_; }
    const std::vector<double>& probabilities() const noexcept { return p_; }
    double p(int k) const { return p_.at(static_cast<std::size_t>(k)); }

    /// True when every p_k > 0, i.e. the state has full rank N+1.
    bool strictly_positive() const noexcept;

    static constexpr double kNormalizationDriftTol = 1e-9;

private:
    int n_;
    std::vector<double> p_;
};

} // namespace dss
