#include <benchmark/benchmark.h>

#include "longcycle/scan.hpp"
#include "longcycle/transforms.hpp"
#include "longcycle/instances.hpp"

namespace {

using namespace longcycle;

void BM_ScanSixVertices(benchmark::State& state) {
  ScanOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto r = scan_extremal(enumeration_stream(6), 6, 2, CycleConstraint::at_least(5), TargetKind::Snk, opt);
    benchmark::DoNotOptimize(r.count_free);
  }
}
BENCHMARK(BM_ScanSixVertices)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ReduceToFixpoint(benchmark::State& state) {
  Rng rng(21);
  const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_fixpoint(g).steps.size());
}
BENCHMARK(BM_ReduceToFixpoint)->Arg(10)->Arg(14);

}  // namespace
