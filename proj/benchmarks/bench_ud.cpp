#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "d6spin/ud.hpp"

namespace {

std::vector<d6::UDPoint> points() {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<d6::Int> d(-50, 50);
  std::vector<d6::UDPoint> out(1024);
  for (auto& x : out)
    for (auto& v : x) v = d(rng);
  return out;
}

void BM_ApplyEcInlined(benchmark::State& state) {
  const auto xs = points();
  const int k = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d6::apply_ec(xs[i], k, -1));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_ApplyEcInlined)->DenseRange(0, 6);

void BM_ApplyEcCompiled(benchmark::State& state) {
  const auto xs = points();
  const int k = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d6::apply_ec_compiled(xs[i], k, -1));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_ApplyEcCompiled)->DenseRange(0, 6);

void BM_F0Table(benchmark::State& state) {
  const auto xs = points();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d6::f0_table(xs[i]));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_F0Table);

void BM_OmegaRoundTrip(benchmark::State& state) {
  const auto xs = points();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d6::omega(d6::omega_inv(xs[i])));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_OmegaRoundTrip);

}  // namespace
