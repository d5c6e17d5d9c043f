#include <benchmark/benchmark.h>

#include "longcycle/cycles.hpp"
#include "longcycle/instances.hpp"

namespace {

using namespace longcycle;

void BM_CircumferenceSparse(benchmark::State& state) {
  Rng rng(11);
  const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)), 0.08);
  for (auto _ : state) benchmark::DoNotOptimize(circumference_length(g));
}
BENCHMARK(BM_CircumferenceSparse)->Arg(12)->Arg(16)->Arg(20);

void BM_CircumferenceSnkPlus(benchmark::State& state) {
  const Graph g = construct_snk_plus(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(circumference_length(g));
}
BENCHMARK(BM_CircumferenceSnkPlus)->Arg(14)->Arg(30);

void BM_CycleLengthMask(benchmark::State& state) {
  Rng rng(12);
  const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_length_mask(g));
}
BENCHMARK(BM_CycleLengthMask)->Arg(10)->Arg(14);

void BM_EndsInPath(benchmark::State& state) {
  Rng rng(13);
  const EndsInInstance inst = generate_ends_in_instance(rng, EndsInMode::Standard);
  for (auto _ : state)
    benchmark::DoNotOptimize(path_with_ends_in(inst.graph, inst.a, inst.b, 2 * inst.k + 1, inst.k));
}
BENCHMARK(BM_EndsInPath);

}  // namespace
