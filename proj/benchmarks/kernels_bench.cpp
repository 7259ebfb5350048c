#include <benchmark/benchmark.h>

#include "pairlight/band.hpp"
#include "pairlight/emission.hpp"
#include "pairlight/entanglement.hpp"
#include "pairlight/parallel.hpp"

namespace {

using namespace pairlight;

void BM_PurityEvaluator(benchmark::State& state) {
    const KGrid grid(static_cast<int>(state.range(0)));
    const PurityEvaluator eval(grid, 0.0);
    const PolarizationAxis pol(1.0, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(eval(SingletChannel::d_x2y2, 0.5, 0.2, pol));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_PurityEvaluator)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_PurityDirect(benchmark::State& state) {
    const KGrid grid(static_cast<int>(state.range(0)));
    const GapSpec g{SingletChannel::d_x2y2, 0.5, 0.2, 0.0};
    const PolarizationAxis pol(1.0, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(purity(g, pol, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_PurityDirect)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DensityOfStates(benchmark::State& state) {
    const KGrid grid(static_cast<int>(state.range(0)));
    const BandParams p;
    const auto mesh = dos_energy_mesh(p, grid, 0.02, 1024);
    for (auto _ : state) benchmark::DoNotOptimize(dos(p, grid, mesh, 0.02));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_DensityOfStates)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SolveMu(benchmark::State& state) {
    const KGrid grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_mu(0.8, BandParams{}, grid, 0.01));
}
BENCHMARK(BM_SolveMu)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DensityMatrix(benchmark::State& state) {
    const KGrid grid(static_cast<int>(state.range(0)));
    const GapSpec g{SingletChannel::s, 0.5, 0.2, 0.0};
    const PhotonPair pair = PhotonPair::from_omega1(0.05, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(two_photon_density_matrix(pair, BandParams{}, g, {kPi / 2, 0.0}, grid, {}));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_DensityMatrix)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
