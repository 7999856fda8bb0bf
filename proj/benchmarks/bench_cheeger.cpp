#include <benchmark/benchmark.h>

#include <dlap/cheeger.hpp>
#include <dlap/families.hpp>
#include <dlap/graph.hpp>
#include <dlap/random.hpp>

namespace {

void BM_CheegerExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dlap::SplitMix64 rng(n);
  const auto d = dlap::bfs_apsp(dlap::random_connected_graph(n, 0.3, rng));
  const auto t = dlap::transmission(d);
  for (auto _ : state) benchmark::DoNotOptimize(dlap::cheeger_exact(d, t));
  state.counters["cuts"] = benchmark::Counter(double((std::uint64_t{1} << (n - 1)) - 1),
                                              benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_CheegerExact)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_CheegerReal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dlap::SplitMix64 rng(n);
  const auto m = dlap::random_metric(n, rng);
  const auto t = dlap::transmission(m.real);
  for (auto _ : state) benchmark::DoNotOptimize(dlap::cheeger_exact(m.real, t));
}
BENCHMARK(BM_CheegerReal)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace
