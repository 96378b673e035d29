#include <benchmark/benchmark.h>

#include "qpm/config.hpp"
#include "qpm/liouville.hpp"
#include "qpm/metamolecule.hpp"
#include "qpm/nanoring.hpp"

namespace {

qpm::ScenarioConfig with_points(qpm::ScenarioKind kind, std::size_t points) {
  auto cfg = qpm::default_config(kind);
  cfg.grid.points = points;
  return cfg;
}

void BM_MetamoleculeSpectrum(benchmark::State& state) {
  const auto cfg = with_points(qpm::ScenarioKind::kMetamolecule, state.range(0));
  const auto p = cfg.metamolecule();
  const auto grid = cfg.frequencies();
  for (auto _ : state) benchmark::DoNotOptimize(qpm::polarizability_spectrum(p, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MetamoleculeSpectrum)->Arg(4001);

void BM_RingPermeability(benchmark::State& state) {
  const auto cfg = with_points(qpm::ScenarioKind::kQdRing, state.range(0));
  const auto ring = cfg.ring();
  const auto grid = cfg.frequencies();
  for (auto _ : state) benchmark::DoNotOptimize(qpm::permeability_spectrum(ring, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RingPermeability)->Arg(4001)->Arg(30001);

void BM_SteadyState(benchmark::State& state) {
  const auto cfg = qpm::default_config(qpm::ScenarioKind::kNonlinear);
  const auto p = cfg.metamolecule();
  const qpm::HilbertConfig h{static_cast<int>(state.range(0))};
  const auto strategy = static_cast<qpm::SolverStrategy>(state.range(1));
  const auto gen =
      qpm::build_liouvillian(qpm::build_hamiltonian(p, p.qd.omega_x, h),
                             {p.mnp.gamma_0, p.qd.gamma_x}, h);
  for (auto _ : state) benchmark::DoNotOptimize(qpm::steady_state(gen, {.strategy = strategy}));
}
BENCHMARK(BM_SteadyState)
    ->Args({15, static_cast<int>(qpm::SolverStrategy::kSparse)})
    ->Args({15, static_cast<int>(qpm::SolverStrategy::kDense)})
    ->Args({20, static_cast<int>(qpm::SolverStrategy::kSparse)})
    ->Unit(benchmark::kMillisecond);

void BM_NonlinearSpectrum(benchmark::State& state) {
  const auto cfg = with_points(qpm::ScenarioKind::kNonlinear, 241);
  const auto p = cfg.metamolecule();
  const auto grid = cfg.frequencies();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpm::nonlinear_spectrum(p, grid, cfg.hilbert, {}, state.range(0)));
  }
}
BENCHMARK(BM_NonlinearSpectrum)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
