#include <benchmark/benchmark.h>

#include "dslice/pleating.hpp"

namespace {

void BM_TracePolynomial(benchmark::State& state) {
    const dslice::Rational r(state.range(0) / 2 - 1, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dslice::trace_polynomial(r));
}
BENCHMARK(BM_TracePolynomial)->Arg(7)->Arg(15)->Arg(31);

void BM_TraceRay(benchmark::State& state) {
    const dslice::Rational r(2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(dslice::trace_ray(r));
}
BENCHMARK(BM_TraceRay)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
