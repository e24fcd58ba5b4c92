#include <benchmark/benchmark.h>

#include <vector>

#include "jcm/scan.hpp"
#include "jcm/validate.hpp"

namespace {

const std::vector<long> kNs{0, 1, 10, 100, 1000};

template <auto Kernel>
void witness(benchmark::State& state) {
  const auto taus = jcm::tau_grid(25.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(kNs, taus));
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(kNs.size()));
}

template <auto Kernel>
void correlation(benchmark::State& state) {
  const auto dist = jcm::thermal_distribution(10.0);
  const auto taus = jcm::tau_grid(25.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(dist, 1.0, taus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void ppt23(benchmark::State& state) {
  const auto taus = jcm::tau_grid(25.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(0.5, 1, taus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void oracle(benchmark::State& state) {
  const auto setup = jcm::oracle_setup(1.0);
  const auto taus = jcm::tau_grid(10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(setup.dist, setup.n_cut, 1.0, taus, 0.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(witness<jcm::serial::witness_scan>)->Name("witness/serial")->Arg(2000);
BENCHMARK(witness<jcm::parallel::witness_scan>)->Name("witness/parallel")->Arg(2000);
BENCHMARK(correlation<jcm::serial::correlation_scan>)->Name("correlation/serial")->Arg(500);
BENCHMARK(correlation<jcm::parallel::correlation_scan>)->Name("correlation/parallel")->Arg(500);
BENCHMARK(ppt23<jcm::serial::ppt23_scan>)->Name("ppt23/serial")->Arg(500);
BENCHMARK(ppt23<jcm::parallel::ppt23_scan>)->Name("ppt23/parallel")->Arg(500);
BENCHMARK(oracle<jcm::serial::oracle_scan>)->Name("oracle/serial")->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle<jcm::parallel::oracle_scan>)->Name("oracle/parallel")->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
