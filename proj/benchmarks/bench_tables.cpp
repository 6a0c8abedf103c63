#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "rrs/alias_table.hpp"
#include "rrs/marsaglia_table.hpp"
#include "rrs/rng.hpp"

namespace {

std::vector<double> power_law_weights(std::size_t n) {
  rrs::RngStream rng(3);
  std::vector<double> w(n);
  for (double& x : w) x = 1.0 / std::sqrt(rng.uniform_open());
  return w;
}

void BM_AliasBuild(benchmark::State& state) {
  const auto w = power_law_weights(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rrs::AliasTable(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AliasBuild)->RangeMultiplier(10)->Range(100, 1'000'000)->Complexity();

void BM_MarsagliaBuild(benchmark::State& state) {
  const auto w = power_law_weights(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rrs::MarsagliaTable(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MarsagliaBuild)->RangeMultiplier(10)->Range(100, 1'000'000)->Complexity();

void BM_AliasSample(benchmark::State& state) {
  const rrs::AliasTable t(power_law_weights(static_cast<std::size_t>(state.range(0))));
  rrs::RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(t.sample(rng));
}
BENCHMARK(BM_AliasSample)->RangeMultiplier(100)->Range(100, 1'000'000);

void BM_MarsagliaSample(benchmark::State& state) {
  const rrs::MarsagliaTable t(power_law_weights(static_cast<std::size_t>(state.range(0))));
  rrs::RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(t.sample(rng));
}
BENCHMARK(BM_MarsagliaSample)->RangeMultiplier(100)->Range(100, 1'000'000);

}  // namespace
