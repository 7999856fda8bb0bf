#include <benchmark/benchmark.h>

#include <dlap/cayley.hpp>
#include <dlap/graph.hpp>
#include <dlap/random.hpp>
#include <dlap/spectral.hpp>

namespace {

dlap::SymmetricDVector cyclic(std::size_t n) {
  const dlap::AbelianGroup g({n});
  const std::vector<std::size_t> conn{1, n - 1};
  return dlap::dvector_from_graph(g, dlap::cayley_graph(g, conn));
}

void BM_CayleySpectrum(benchmark::State& state) {
  const auto d = cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dlap::cayley_spectrum(d));
}
BENCHMARK(BM_CayleySpectrum)->RangeMultiplier(4)->Range(16, 4096);

// Same spectrum through the dense pipeline, for comparison.
void BM_CayleyDense(benchmark::State& state) {
  const auto d = cyclic(static_cast<std::size_t>(state.range(0)));
  const auto m = dlap::build_ndl(d.distance_matrix());
  for (auto _ : state) benchmark::DoNotOptimize(dlap::eig_sym(m));
}
BENCHMARK(BM_CayleyDense)->RangeMultiplier(4)->Range(16, 64)->Unit(benchmark::kMillisecond);

}  // namespace
