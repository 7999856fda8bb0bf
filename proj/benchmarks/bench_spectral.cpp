#include <benchmark/benchmark.h>

#include <dlap/families.hpp>
#include <dlap/graph.hpp>
#include <dlap/random.hpp>
#include <dlap/spectral.hpp>

namespace {

void BM_JacobiNdl(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dlap::SplitMix64 rng(n);
  const auto m = dlap::build_ndl(dlap::bfs_apsp(dlap::random_connected_graph(n, 0.2, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(dlap::eig_sym(m));
}
BENCHMARK(BM_JacobiNdl)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);

void BM_BfsApsp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dlap::SplitMix64 rng(n);
  const auto g = dlap::random_connected_graph(n, 8.0 / double(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dlap::bfs_apsp(g));
}
BENCHMARK(BM_BfsApsp)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
