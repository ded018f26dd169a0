#include <benchmark/benchmark.h>

#include "circlehall/shuffle.hpp"
#include "circlehall/words.hpp"

using namespace circlehall;

static void BM_HallTableDelta2(benchmark::State& state) {
  long long n = 2;
  int q = static_cast<int>(state.range(0));
  StepFunction d(n, {2, 2});
  for (auto _ : state) {
    // fresh cache each iteration to measure the enumeration itself
    HallCache cache;
    benchmark::DoNotOptimize(cache.table(n, q, d, Bounds::with_total(8)));
  }
}
BENCHMARK(BM_HallTableDelta2)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Straighten(benchmark::State& state) {
  long long n = state.range(0);
  Arc j = Arc::interval(Rat(0), Rat(n - 1, n));
  std::vector<GeneratorSymbol> word{GeneratorSymbol(GenKind::F, j), GeneratorSymbol(GenKind::E, j)};
  for (auto _ : state) benchmark::DoNotOptimize(straighten(word, n, 2));
}
BENCHMARK(BM_Straighten)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_ShuffleKeystone(benchmark::State& state) {
  ZetaData zd(0, 2);
  ShuffleContext ctx{zd, static_cast<size_t>(state.range(0)), std::nullopt};
  for (auto _ : state) {
    ShuffleElement a = rank1_generator(ctx, 2, 0);
    ShuffleElement b = rank1_generator(ctx, 2, 1);
    benchmark::DoNotOptimize(shuffle_product(a, b));
  }
}
BENCHMARK(BM_ShuffleKeystone)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
