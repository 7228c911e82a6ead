// Parallel kernels vs their serial reference implementations.  The two
// paths are bit-identical by construction (per-draw counter RNG, additive
// counts); these benchmarks measure what the OpenMP parallelism buys on
// the curve sweep and the rejection-sampling oracle.

#include <benchmark/benchmark.h>

#include "faultbayes/inference.hpp"
#include "faultbayes/oracle.hpp"
#include "faultbayes/presets.hpp"
#include "faultbayes/reference.hpp"

namespace {

using namespace faultbayes;

void BM_curve_parallel(benchmark::State& state) {
    const FailureModel model = pot_model();
    const std::int64_t n_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(posterior_curve(model, n_max));
    }
}
BENCHMARK(BM_curve_parallel)->Arg(500)->Arg(2000);

void BM_curve_serial(benchmark::State& state) {
    const FailureModel model = pot_model();
    const std::int64_t n_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::posterior_curve(model, n_max));
    }
}
BENCHMARK(BM_curve_serial)->Arg(500)->Arg(2000);

void BM_oracle_parallel(benchmark::State& state) {
    const FailureModel model = pot_model();
    const Evidence evidence{5, 5};
    const OracleBudget budget{static_cast<std::uint64_t>(state.range(0)),
                              100000000};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            estimate_posterior(model, evidence, budget, 42));
    }
}
BENCHMARK(BM_oracle_parallel)->Arg(10000)->Arg(50000);

void BM_oracle_serial(benchmark::State& state) {
    const FailureModel model = pot_model();
    const Evidence evidence{5, 5};
    const OracleBudget budget{static_cast<std::uint64_t>(state.range(0)),
                              100000000};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            reference::estimate_posterior(model, evidence, budget, 42));
    }
}
BENCHMARK(BM_oracle_serial)->Arg(10000)->Arg(50000);

}  // namespace

BENCHMARK_MAIN();
