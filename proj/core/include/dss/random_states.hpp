#pragma once

#include <random>

#include "dss/state.hpp"

namespace dss {

/// Uniform-ish state on the probability simplex (normalized exponentials).
/// Produces full-NPT, partial-NPT and PPT states alike.
DssState sample_dss(int n, std::mt19937_64& rng);

/// Strictly full-NPT state with comfortable margins. The inequality family
/// on consecutive triples is equivalent to strict log-concavity of
/// p_k / C(N,k), so sampling strictly decreasing increments of
/// log(p_k / C(N,k)) hits the full-NPT region by construction.
DssState sample_full_npt(int n, std::mt19937_64& rng);

} // namespace dss
