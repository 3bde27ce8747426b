#include <benchmark/benchmark.h>

#include "dslice/raster.hpp"

namespace {

void BM_ScanDiagonal(benchmark::State& state) {
    dslice::GridSpec g;
    g.center = {0.5, 0.0};
    g.width = 12.0;
    g.height = 8.0;
    g.nx = g.ny = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dslice::scan(g, dslice::SliceKind::diagonal(), {}, 1));
    state.SetItemsProcessed(state.iterations() * g.nx * g.ny);
}
BENCHMARK(BM_ScanDiagonal)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_RenderPpm(benchmark::State& state) {
    dslice::VerdictMatrix m{256, 256, std::vector<dslice::Verdict>(256 * 256, dslice::Verdict::in_set(3, 2))};
    for (auto _ : state) benchmark::DoNotOptimize(dslice::render(m).to_ppm());
}
BENCHMARK(BM_RenderPpm);

}  // namespace

BENCHMARK_MAIN();
