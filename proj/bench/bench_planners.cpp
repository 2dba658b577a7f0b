// Parallel vs serial exact search, plus the two heuristics, on generated
// benchmark instances. Thread count follows OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include "uavplan/benchgen.hpp"
#include "uavplan/planners.hpp"

namespace {

using namespace uavplan;

const EnergyModel& model() {
  static const EnergyModel m = reference_model();
  return m;
}

DeliveryProblem instance(std::size_t n) {
  model();  // build the fitted model outside the timed loop
  BenchmarkSpec spec;
  spec.payload_class = PayloadClass::Medium;
  spec.depot_label = 'A';
  spec.waypoint_count = n;
  spec.instance_index = 1;
  spec.rng_seed = cell_seed(2024, suite_entry_id(n, spec.canonical_name()));
  return generate(spec);
}

const SpeedGrid grid{{3, 4, 5, 6, 7, 8}};

void BM_exact_parallel(benchmark::State& state) {
  const auto p = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plan_exact(p, model(), grid));
}

void BM_exact_serial(benchmark::State& state) {
  const auto p = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plan_exact_serial(p, model(), grid));
}

void BM_greedy(benchmark::State& state) {
  const auto p = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plan_greedy(p, model(), grid));
}

void BM_sa(benchmark::State& state) {
  const auto p = instance(static_cast<std::size_t>(state.range(0)));
  const auto seed = plan_greedy(p, model(), grid).trajectory;
  for (auto _ : state) benchmark::DoNotOptimize(plan_sa(p, model(), seed, grid, SaParams{}));
}

}  // namespace

BENCHMARK(BM_exact_parallel)->DenseRange(5, 9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_exact_serial)->DenseRange(5, 9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_greedy)->DenseRange(5, 10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_sa)->DenseRange(5, 10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
