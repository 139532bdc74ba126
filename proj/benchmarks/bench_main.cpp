#include <benchmark/benchmark.h>

#include "ajc/oracle.hpp"
#include "ajc/scan.hpp"
#include "ajc/squeezed_field.hpp"
#include "ajc/time_grid.hpp"

namespace {

ajc::SimulationConfig strong_coupling() {
  ajc::SimulationConfig cfg;
  cfg.state = ajc::SqueezedStateParams::from_intensity(30.0, 2.0, 0.0);
  cfg.model.xi = 0.0001;
  cfg.grid = {0.0, 100.0, 4001};
  return cfg;
}

void BM_Amplitudes(benchmark::State& state) {
  const auto params = ajc::SqueezedStateParams::from_intensity(30.0, 2.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(ajc::amplitudes(params));
}
BENCHMARK(BM_Amplitudes);

void BM_AmplitudeHermite(benchmark::State& state) {
  const auto params = ajc::SqueezedStateParams::from_intensity(30.0, 2.0, 0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ajc::amplitude_hermite(params, state.range(0)));
}
BENCHMARK(BM_AmplitudeHermite)->Arg(10)->Arg(100)->Arg(400);

void BM_EvolveSeries(benchmark::State& state) {
  auto cfg = strong_coupling();
  cfg.grid.steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ajc::evolve_series(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveSeries)->Arg(1001)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_OracleCompare(benchmark::State& state) {
  const auto params = ajc::SqueezedStateParams::from_intensity(2.0, 0.5, 0.0);
  ajc::AjcParams model;
  model.xi = 0.9;
  const auto amps = ajc::amplitudes(params, 1e-12);
  const ajc::TimeGrid grid{0.0, 20.0, 201};
  for (auto _ : state) benchmark::DoNotOptimize(ajc::oracle::compare(model, amps, grid));
}
BENCHMARK(BM_OracleCompare)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
