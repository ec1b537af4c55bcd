#include <benchmark/benchmark.h>

#include "hopf/flow.hpp"
#include "hopf/sampling.hpp"
#include "hopf/tensors.hpp"

namespace {

using namespace hopf;

void BM_SolvePhi(benchmark::State& state) {
    const HopfModuli m = make_moduli(2.0, 4.0);
    PointSampler gen(m, 1);
    std::vector<AmbientPoint> pts;
    for (int i = 0; i < 256; ++i) pts.push_back(gen.next());
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_phi(m, pts[k++ % pts.size()]));
    }
}
BENCHMARK(BM_SolvePhi);

void BM_HatMetric(benchmark::State& state) {
    const HopfModuli m = make_moduli(2.0, 4.0);
    PointSampler gen(m, 2);
    std::vector<AmbientPoint> pts;
    for (int i = 0; i < 256; ++i) pts.push_back(gen.next());
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hat_metric(m, pts[k++ % pts.size()]));
    }
}
BENCHMARK(BM_HatMetric);

void BM_FlowRhs(benchmark::State& state) {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{static_cast<int>(state.range(0)),
                        static_cast<int>(state.range(0)), m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    FlowState s{m, grid, 0.1, make_initial_potential(m, grid, {})};
    for (auto _ : state) {
        benchmark::DoNotOptimize(flow_rhs(geo, s));
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_FlowRhs)->Arg(64)->Arg(128);

void BM_Rk4Step(benchmark::State& state) {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{64, 64, m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    const FlowState s{m, grid, 0.1, make_initial_potential(m, grid, {})};
    for (auto _ : state) {
        benchmark::DoNotOptimize(step_rk4(geo, s, 1e-5));
    }
}
BENCHMARK(BM_Rk4Step);

}  // namespace

BENCHMARK_MAIN();
