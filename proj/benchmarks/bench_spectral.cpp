#include <benchmark/benchmark.h>

#include "longcycle/instances.hpp"
#include "longcycle/spectral.hpp"

namespace {

using namespace longcycle;

void BM_SpectralRadiusSnk(benchmark::State& state) {
  const Graph g = construct_snk(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).mu);
}
BENCHMARK(BM_SpectralRadiusSnk)->Arg(10)->Arg(32)->Arg(64);

void BM_SpectralRadiusRandom(benchmark::State& state) {
  Rng rng(7);
  const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).mu);
}
BENCHMARK(BM_SpectralRadiusRandom)->Arg(12)->Arg(40)->Arg(64);

void BM_Certificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = construct_snk(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_certificate(g, 2, 3.0 * (n - 3)).verdict);
}
BENCHMARK(BM_Certificate)->Arg(16)->Arg(64);

}  // namespace
