#include <benchmark/benchmark.h>

#include "d6spin/crystal.hpp"
#include "d6spin/explorer.hpp"

namespace {

void BM_EnumerateBacktrack(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(d6::enumerate_backtrack(state.range(0)));
}
BENCHMARK(BM_EnumerateBacktrack)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateBfs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(d6::enumerate_bfs(state.range(0)));
}
BENCHMARK(BM_EnumerateBfs)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Ball(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        d6::ball(d6::Element{}, d6::Level::infinity(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Ball)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SelectCondition(benchmark::State& state) {
  const auto elems = d6::enumerate_backtrack(2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d6::select_condition(elems[i], d6::Family::F));
    i = (i + 1) % elems.size();
  }
}
BENCHMARK(BM_SelectCondition);

void BM_ApplyF0(benchmark::State& state) {
  const auto elems = d6::enumerate_backtrack(2);
  const auto spec = d6::Level::finite(2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d6::apply_f(elems[i], spec, 0));
    i = (i + 1) % elems.size();
  }
}
BENCHMARK(BM_ApplyF0);

}  // namespace
