#include <benchmark/benchmark.h>

#include "tm32/analysis.hpp"
#include "tm32/padic.hpp"
#include "tm32/toeplitz.hpp"
#include "tm32/words.hpp"

using namespace tm32;

static void BM_T32Prefix(benchmark::State& state) {
  const auto via = static_cast<words::T32Via>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(words::t32(via).prefix(static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_T32Prefix)->ArgsProduct({{1 << 16, 1 << 20}, {0, 1, 2}});

static void BM_ToeplitzSymbol(benchmark::State& state) {
  const auto w = toeplitz::ToeplitzPattern::parse("01?0?10??");
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz::toeplitz_symbol(w, i++ * 7919));
}
BENCHMARK(BM_ToeplitzSymbol);

static void BM_ZetaGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(padic::zeta_k_sup(2, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ZetaGrid)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

static void BM_FilteredCounter(benchmark::State& state) {
  const Word x = words::t32().prefix(1'000'000);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analysis::filtered_counter(x, n, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_FilteredCounter)->Arg(0)->Arg(6)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ApplyL(benchmark::State& state) {
  const auto d = padic::FiniteLevelFunction::constant(static_cast<unsigned>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(padic::apply_L(d));
}
BENCHMARK(BM_ApplyL)->Arg(12)->Arg(20);
BENCHMARK_MAIN();
