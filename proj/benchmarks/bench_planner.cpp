/*
 * microbenchmarks for the planner stages; grid side and agent count come in
 * through the benchmark arguments
 */
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "formation/assignment.hpp"
#include "formation/generators.hpp"
#include "formation/graph.hpp"
#include "formation/io.hpp"
#include "formation/planner.hpp"
#include "formation/scheduler.hpp"

namespace {

formation::Instance grid_instance(int side, int agents) {
  return formation::to_instance(formation::gen_random(side, side, agents, 97));
}

void BM_DistanceMatrix(benchmark::State& state) {
  formation::Instance instance =
      grid_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto matrix = formation::distance_matrix(instance);
    benchmark::DoNotOptimize(matrix);
  }
}
BENCHMARK(BM_DistanceMatrix)->Args({20, 100})->Args({40, 100})->Args({100, 100});

void BM_Hungarian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::vector<std::vector<int>> cost(n, std::vector<int>(n));
  for (auto& row : cost) {
    for (auto& entry : row) entry = static_cast<int>(formation::uniform_below(rng, 100));
  }
  for (auto _ : state) {
    formation::Assignment assignment = formation::hungarian(cost);
    benchmark::DoNotOptimize(assignment.total_cost);
  }
}
BENCHMARK(BM_Hungarian)->Arg(64)->Arg(128)->Arg(256);

void BM_Plan(benchmark::State& state) {
  formation::Instance instance =
      grid_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    formation::PlanResult result = formation::plan(instance, false);
    benchmark::DoNotOptimize(result.schedule.makespan);
  }
}
BENCHMARK(BM_Plan)
    ->Args({20, 100})
    ->Args({40, 100})
    ->Args({100, 100})
    ->Args({100, 1000})
    ->Unit(benchmark::kMillisecond);

void BM_Compress(benchmark::State& state) {
  formation::Instance instance =
      grid_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  formation::PathSet ordered = formation::plan(instance, false).ordered;
  for (auto _ : state) {
    formation::Schedule schedule = formation::compress(ordered);
    benchmark::DoNotOptimize(schedule.makespan);
  }
}
BENCHMARK(BM_Compress)->Args({40, 100})->Args({100, 1000});

}  // namespace

BENCHMARK_MAIN();
