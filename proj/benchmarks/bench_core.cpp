#include <benchmark/benchmark.h>

#include <logimap/logimap.hpp>

namespace {

using namespace logimap;

void BM_ExactIterateEval(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const IterateCdf d = iterate_pushforward(make_cdf(DistSpec::uniform()), MapParam(4.0), n,
                                           IterationStrategy::ExactRecursive);
  double y = 0.0;
  for (auto _ : state) {
    y += 0.000123;
    if (y >= 1.0) y -= 1.0;
    benchmark::DoNotOptimize(d(y));
  }
}
BENCHMARK(BM_ExactIterateEval)->DenseRange(2, 12, 2);

void BM_GridIterateBuild(benchmark::State& state) {
  const auto grid = static_cast<std::size_t>(state.range(0));
  const CdfFn base = make_cdf(DistSpec::uniform());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        iterate_pushforward(base, MapParam(4.0), 16, IterationStrategy::GridInterpolated, grid));
  }
}
BENCHMARK(BM_GridIterateBuild)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_CdfBeta(benchmark::State& state) {
  double y = 0.0;
  for (auto _ : state) {
    y += 0.000123;
    if (y >= 1.0) y -= 1.0;
    benchmark::DoNotOptimize(cdf_beta(0.5, 0.5, y));
  }
}
BENCHMARK(BM_CdfBeta);

void BM_EnsemblePush(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ensemble_push(DistSpec::uniform(), MapParam(4.0), 4, samples, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_EnsemblePush)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_ErgodicOrbit(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ergodic_empirical(MapParam(4.0), steps, kDefaultBurnIn, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(steps));
}
BENCHMARK(BM_ErgodicOrbit)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
