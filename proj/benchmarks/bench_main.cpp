#include <benchmark/benchmark.h>

#include <cmath>

#include "oligopoly/cdblock.hpp"
#include "oligopoly/dynamics.hpp"
#include "oligopoly/jacobian.hpp"
#include "oligopoly/market.hpp"
#include "oligopoly/region.hpp"
#include "oligopoly/stability.hpp"

using namespace oligopoly;

namespace {

void BM_BestResponse(benchmark::State& state) {
    const MarketParams m{0.5};
    double s = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_response(s, m));
        s = s < 10.0 ? s * 1.001 : 0.3;
    }
}
BENCHMARK(BM_BestResponse);

void BM_Step(benchmark::State& state) {
    const Preset preset = static_cast<Preset>(state.range(0));
    const ModelSpec model = presets::make(preset, 0.8, 0.6, 0.5);
    OutputVector x = interior_equilibrium(model);
    {
        std::vector<double> q(x.values().begin(), x.values().end());
        for (double& v : q) v *= 1.05;
        x = OutputVector(std::move(q));
    }
    for (auto _ : state) {
        x = step(model, x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Step)->DenseRange(0, 3)->ArgNames({"preset"});

void BM_SchurCohnDegree4(benchmark::State& state) {
    const auto poly = char_poly(jacobian_analytic(Preset::Gbal, 0.9, 0.6, 0.5));
    for (auto _ : state) benchmark::DoNotOptimize(schur_cohn(poly).verdict);
}
BENCHMARK(BM_SchurCohnDegree4);

void BM_CdBlock(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cd_block(Preset::Gbalr, 1.1, 0.7, 0.5).verdict);
}
BENCHMARK(BM_CdBlock);

void BM_ScanPlane(benchmark::State& state) {
    GridSpec grid;
    grid.ksqrtc = {0.05, 3.0, 200};
    grid.l = {0.01, 1.0, 100};
    grid.c = 0.5;
    const std::size_t workers = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const RegionGrid region = scan_plane(Preset::Gbalr, grid, workers);
        benchmark::DoNotOptimize(region.cells.data());
    }
    state.SetItemsProcessed(state.iterations() * 200 * 100);
}
BENCHMARK(BM_ScanPlane)->Arg(1)->Arg(4)->ArgNames({"workers"});

}  // namespace

BENCHMARK_MAIN();
