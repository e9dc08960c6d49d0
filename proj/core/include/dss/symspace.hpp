#pragma once

#include <cstdint>
#include <span>

#include "dss/hermitian.hpp"
#include "dss/state.hpp"

namespace dss {

/// Exact binomial coefficient C(n,k) in integer arithmetic.
/// Throws std::domain_error for k outside [0,n] and std::overflow_error if
/// the result does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Density-matrix embedding of a Dicke-diagonal coefficient vector into the
/// C^2 (x) C^N bipartition, basis ordered |0>|0..N-1>, |1>|0..N-1>. Each
/// basis vector |D_k^N> maps to
///   sqrt((N-k)/N) |0>|k> + sqrt(k/N) |1>|k-1>.
/// The coefficients need not be normalized (used for sub-normalized parts
/// of a decomposition as well as for proper states).
HermitianMatrix embed_dicke_diagonal(int n, std::span<const double> coeffs);

/// 2N x 2N density matrix of a DSS state; trace 1, positive semidefinite,
/// rank equal to the number of nonzero p_k.
HermitianMatrix embed_bipartite(const DssState& s);

} // namespace dss
