#include <benchmark/benchmark.h>

#include "dslice/bowditch.hpp"

namespace {

void BM_MembershipSingleVertex(benchmark::State& state) {
    const dslice::Triple t{2.5, 2.5, 2.5};
    for (auto _ : state) benchmark::DoNotOptimize(dslice::membership(t, {}));
}
BENCHMARK(BM_MembershipSingleVertex);

void BM_MembershipNearBoundary(benchmark::State& state) {
    const dslice::cplx x{1.2, 1.6};
    const dslice::Triple t{x, x, x};
    for (auto _ : state) benchmark::DoNotOptimize(dslice::membership(t, {}));
}
BENCHMARK(BM_MembershipNearBoundary);

void BM_MembershipBudget(benchmark::State& state) {
    dslice::BowditchParams p;
    p.enable_mu0_heuristic = false;
    p.max_sink_edges = state.range(0);
    const dslice::Triple t{0.0, 0.0, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(dslice::membership(t, p));
}
BENCHMARK(BM_MembershipBudget)->Arg(1000)->Arg(10000)->Arg(50000);

}  // namespace

BENCHMARK_MAIN();
