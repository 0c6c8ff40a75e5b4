#include <benchmark/benchmark.h>

#include "isocoulomb/factorization.hpp"
#include "isocoulomb/potential.hpp"
#include "isocoulomb/quadrature.hpp"
#include "isocoulomb/spectral.hpp"

#include <cmath>

using namespace isocoulomb;

static void BM_truncated_integral(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    double r = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncated_integral(l, r));
        r = (r < 40.0) ? r + 0.37 : 0.1;
    }
}
BENCHMARK(BM_truncated_integral)->Arg(1)->Arg(3)->Arg(6);

static void BM_potential_tilde(benchmark::State& state) {
    const FactorizationParams p = FactorizationParams::make(1, state.range(0) == 0 ? 0.25 : 1.0);
    double r = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(potential_tilde(p, r));
        r = (r < 15.0) ? r + 0.0107 : 0.01;
    }
}
BENCHMARK(BM_potential_tilde)->Arg(0)->Arg(1); // critical vs regular path

static void BM_missing_state_norm(benchmark::State& state) {
    for (auto _ : state) {
        const MissingState s(FactorizationParams::make(1, 1.0));
        benchmark::DoNotOptimize(s.norm_constant());
    }
}
BENCHMARK(BM_missing_state_norm);

static void BM_lowest_eigenvalues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double r_max = 60.0;
    const double h = r_max / n;
    const SpectralProblem prob =
        discretize(PotentialSpec::deformed(FactorizationParams::make(1, 1.0)),
                   RadialGrid::from_spacing(h, r_max));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lowest_eigenvalues(prob, 4));
    }
}
BENCHMARK(BM_lowest_eigenvalues)->Arg(1500)->Arg(6000);

static void BM_verify_isospectral(benchmark::State& state) {
    const FactorizationParams p = FactorizationParams::make(1, 1.0);
    const RadialGrid grid = RadialGrid::from_spacing(0.02, 60.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_isospectral(p, grid, 4));
    }
}
BENCHMARK(BM_verify_isospectral);

BENCHMARK_MAIN();
