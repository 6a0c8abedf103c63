#include <benchmark/benchmark.h>

#include <string>

#include "rrs/kmc.hpp"
#include "rrs/ssa.hpp"

namespace {

void BM_KmcStep(benchmark::State& state) {
  rrs::kmc::Config config;
  config.n_particles = static_cast<std::size_t>(state.range(0));
  config.backend = static_cast<rrs::kmc::Backend>(state.range(1));
  rrs::kmc::Simulation sim(config);
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
  state.counters["proposals"] = benchmark::Counter(static_cast<double>(sim.proposals()),
                                                   benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_KmcStep)
    ->ArgsProduct({{100, 10'000},
                   {static_cast<long>(rrs::kmc::Backend::kReducedRejection),
                    static_cast<long>(rrs::kmc::Backend::kAcceptanceRejection)}})
    ->ArgNames({"n", "backend"});

// Many independent decays: every reaction stays live for the whole run.
rrs::ssa::ReactionNetwork decays(std::size_t species) {
  rrs::ssa::ReactionNetwork net;
  for (std::size_t i = 0; i < species; ++i) {
    const auto a = net.add_species("A" + std::to_string(i), 1'000'000);
    net.add_reaction(1.0 + static_cast<double>(i % 7), {a}, {});
  }
  return net;
}

void BM_SsaStep(benchmark::State& state) {
  rrs::ssa::Simulator sim(decays(static_cast<std::size_t>(state.range(0))),
                          static_cast<rrs::ssa::Backend>(state.range(1)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
}
BENCHMARK(BM_SsaStep)
    ->ArgsProduct({{10, 1'000},
                   {static_cast<long>(rrs::ssa::Backend::kDirect),
                    static_cast<long>(rrs::ssa::Backend::kAcceptanceRejection),
                    static_cast<long>(rrs::ssa::Backend::kReducedRejection)}})
    ->ArgNames({"reactions", "backend"});

}  // namespace
