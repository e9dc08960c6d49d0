#include <benchmark/benchmark.h>

#include <random>

#include "dss/bsa.hpp"
#include "dss/nptcheck.hpp"
#include "dss/oracle.hpp"
#include "dss/random_states.hpp"
#include "dss/region.hpp"
#include "dss/symspace.hpp"

namespace {

// Full-NPT states only exist with numerically comfortable margins at desk
// scale; p_0 and p_N shrink like 2^-N, so the strict-inequality margins fall
// under the classification threshold somewhere past N ~ 12. Benchmarks that
// need the full-NPT domain stay at N <= 8; the generic ones use plain
// simplex samples.
dss::DssState fixed_full_npt(int n) {
    std::mt19937_64 rng(31000 + static_cast<std::uint64_t>(n));
    return dss::sample_full_npt(n, rng);
}

dss::DssState fixed_dss(int n) {
    std::mt19937_64 rng(32000 + static_cast<std::uint64_t>(n));
    return dss::sample_dss(n, rng);
}

void BM_EmbedBipartite(benchmark::State& state) {
    const dss::DssState s = fixed_dss(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::embed_bipartite(s));
    }
}
BENCHMARK(BM_EmbedBipartite)->Arg(3)->Arg(8)->Arg(16)->Arg(32);

void BM_PtSpectrum(benchmark::State& state) {
    const dss::DssState s = fixed_dss(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::pt_spectrum(s));
    }
}
BENCHMARK(BM_PtSpectrum)->Arg(3)->Arg(8)->Arg(16);

void BM_Classify(benchmark::State& state) {
    const dss::DssState s = fixed_dss(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::classify(s));
    }
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(8)->Arg(16);

void BM_ComputeBsa(benchmark::State& state) {
    const dss::DssState s = fixed_full_npt(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::compute_bsa(s));
    }
}
BENCHMARK(BM_ComputeBsa)->Arg(3)->Arg(5)->Arg(8);

void BM_SingleMaximality(benchmark::State& state) {
    const dss::DssState s = fixed_full_npt(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::verify_single_maximality(s, 1));
    }
}
BENCHMARK(BM_SingleMaximality)->Arg(3)->Arg(8);

void BM_OracleUpper(benchmark::State& state) {
    const dss::DssState s = fixed_full_npt(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::oracle_upper_ppt(s));
    }
}
BENCHMARK(BM_OracleUpper)->Arg(3)->Arg(8);

void BM_OracleLowerLp(benchmark::State& state) {
    const dss::DssState s = fixed_full_npt(3);
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::oracle_lower_lp(s, grid));
    }
}
BENCHMARK(BM_OracleLowerLp)->Arg(251)->Arg(1001)->Arg(2001);

void BM_RegionScan(benchmark::State& state) {
    const int resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dss::region_scan(4, resolution));
    }
}
BENCHMARK(BM_RegionScan)->Arg(100)->Arg(200);

} // namespace

BENCHMARK_MAIN();
