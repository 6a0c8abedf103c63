#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "rrs/dynamic_weights.hpp"
#include "rrs/rng.hpp"

namespace {

// One sample followed by one update of the sampled index, the access
// pattern of an interacting-particle simulation.
void BM_SampleAndUpdate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto backend = static_cast<rrs::TableBackend>(state.range(1));
  rrs::RngStream rng(7);
  std::vector<double> w(n);
  for (double& x : w) x = 1.0 / std::sqrt(rng.uniform_open());
  rrs::DynamicWeightsOptions options;
  options.table = backend;
  rrs::DynamicWeights weights(w, options);
  std::uint64_t proposals = 0;
  for (auto _ : state) {
    const auto r = weights.sample(rng);
    proposals += r.total_proposals();
    weights.update_weight(r.value, 1.0 / std::sqrt(rng.uniform_open()));
  }
  state.counters["proposals"] =
      benchmark::Counter(static_cast<double>(proposals), benchmark::Counter::kAvgIterations);
  state.counters["reinits"] = static_cast<double>(weights.reinit_count());
}
BENCHMARK(BM_SampleAndUpdate)
    ->ArgsProduct({{1'000, 10'000, 100'000},
                   {static_cast<long>(rrs::TableBackend::kMarsaglia),
                    static_cast<long>(rrs::TableBackend::kAlias)}})
    ->ArgNames({"n", "table"});

}  // namespace
