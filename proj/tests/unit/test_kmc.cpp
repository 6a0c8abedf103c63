#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "helpers.hpp"
#include "rrs/error.hpp"
#include "rrs/kmc.hpp"
#include "rrs/kmc_bench.hpp"

namespace rrs::kmc {
namespace {

Config small_config(Backend backend, std::size_t n = 10, std::uint64_t seed = 1) {
  Config c;
  c.n_particles = n;
  c.backend = backend;
  c.seed = seed;
  return c;
}

TEST(ExpectedG, ClosedForms) {
  EXPECT_NEAR(expected_g(10'000, 0.5, Observable::kSum), 5999.8, 1e-9);
  EXPECT_NEAR(expected_g(2, 0.5, Observable::kSum), 1.0, 1e-15);
  EXPECT_NEAR(expected_g(100, 0.5, Observable::kSum), 59.8, 1e-12);
  EXPECT_NEAR(expected_g(100, 0.5, Observable::kSumOfSquares), 128.0 / 3.0, 1e-12);
  EXPECT_NEAR(stationary_normalizer(2, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(stationary_normalizer(4, 0.5), 6.0 / 2.25, 1e-14);
}

TEST(ExpectedG, InvalidParams) {
  EXPECT_THROW(expected_g(1, 0.5, Observable::kSum), Error);
  EXPECT_THROW(expected_g(10, 0.0, Observable::kSum), Error);
  EXPECT_THROW(expected_g(10, 1.0, Observable::kSum), Error);
  Config c;
  c.n_particles = 1;
  EXPECT_THROW(c.validate(), Error);
  c.n_particles = 10;
  c.alpha = -0.1;
  EXPECT_THROW(c.validate(), Error);
}

TEST(Backend, Parse) {
  EXPECT_EQ(parse_backend("rr"), Backend::kReducedRejection);
  EXPECT_EQ(parse_backend("ar"), Backend::kAcceptanceRejection);
  EXPECT_FALSE(parse_backend("direct"));
  EXPECT_EQ(to_string(Backend::kAcceptanceRejection), "ar");
}

TEST(ParticleSystem, RatesAndSums) {
  ParticleSystem sys({0.25, 0.5, 1.0 / 16}, 0.5);
  EXPECT_DOUBLE_EQ(sys.rate(0), 2.0);
  EXPECT_DOUBLE_EQ(sys.rate(2), 4.0);
  EXPECT_DOUBLE_EQ(sys.sum_x(), 0.8125);
  sys.set_state(2, 0.25);
  EXPECT_DOUBLE_EQ(sys.rate(2), 2.0);
  EXPECT_NEAR(sys.total_rate(), 4.0 + std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(sys.sum_x2(), 0.0625 * 2 + 0.25);
}

std::vector<double> pair_probabilities(const ParticleSystem& sys, SelfPairPolicy policy) {
  const std::size_t n = sys.size();
  const double s = sys.total_rate();
  std::vector<double> probs(n * n, 0.0);
  double self = 0.0;
  for (std::size_t k = 0; k < n; ++k) self += sys.rate(k) * sys.rate(k);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const double sk = sys.rate(k);
      const double sl = sys.rate(l);
      switch (policy) {
        case SelfPairPolicy::kAllow: probs[k * n + l] = sk * sl / (s * s); break;
        case SelfPairPolicy::kRedrawPair:
          probs[k * n + l] = k == l ? 0.0 : sk * sl / (s * s - self);
          break;
        case SelfPairPolicy::kRedrawSecond:
          probs[k * n + l] = k == l ? 0.0 : sk / s * sl / (s - sk);
          break;
      }
    }
  }
  return probs;
}

class FrozenPairs
    : public ::testing::TestWithParam<std::tuple<Backend, SelfPairPolicy>> {};

TEST_P(FrozenPairs, MatchProductDistribution) {
  const auto [backend, policy] = GetParam();
  Config c = small_config(backend, 8, 17);
  c.self_pairs = policy;
  std::vector<double> x{0.9, 0.003, 0.5, 0.2, 0.07, 0.6, 0.31, 0.015};
  Simulation sim(c, x);
  const std::size_t n = x.size();
  std::uint64_t proposals = 0;
  const auto counts = test::histogram(n * n, 1'000'000, [&] {
    const auto [k, l] = sim.select_pair(proposals);
    return k * n + l;
  });
  const auto probs = pair_probabilities(sim.system(), policy);
  EXPECT_TRUE(gof::chi_square(counts, probs).passes(test::kSignificance));
}

std::string frozen_pairs_name(
    const ::testing::TestParamInfo<std::tuple<Backend, SelfPairPolicy>>& info) {
  const char* policies[] = {"RedrawPair", "RedrawSecond", "Allow"};
  return std::string(to_string(std::get<0>(info.param))) +
         policies[static_cast<int>(std::get<1>(info.param))];
}

INSTANTIATE_TEST_SUITE_P(
    Kmc, FrozenPairs,
    ::testing::Combine(::testing::Values(Backend::kReducedRejection,
                                         Backend::kAcceptanceRejection),
                       ::testing::Values(SelfPairPolicy::kRedrawPair,
                                         SelfPairPolicy::kRedrawSecond,
                                         SelfPairPolicy::kAllow)),
    frozen_pairs_name);

TEST(Simulation, WaitingTimeHasMeanInverseRateSquared) {
  Simulation sim(small_config(Backend::kReducedRejection, 50, 3));
  CompensatedSum scaled;
  const int steps = 100'000;
  for (int i = 0; i < steps; ++i) {
    const double s = sim.system().total_rate();
    scaled.add(sim.step().dt * s * s);
  }
  EXPECT_NEAR(scaled.value() / steps, 1.0, 4.0 / std::sqrt(steps));
}

TEST(Simulation, ExcessSetGrowsByAtMostTwoPerInteraction) {
  Config c = small_config(Backend::kReducedRejection, 400, 5);
  c.reinit_threshold = 60;
  Simulation sim(c);
  std::size_t prev = 0;
  std::uint64_t prev_reinit = 0;
  for (int i = 0; i < 20'000; ++i) {
    sim.step();
    const std::size_t now = sim.weights()->excess_set().size();
    if (sim.reinit_count() == prev_reinit) {
      ASSERT_LE(now, prev + 2);
      ASSERT_GE(now + 2, prev);
    }
    ASSERT_LE(now, 60u);
    prev = now;
    prev_reinit = sim.reinit_count();
  }
  EXPECT_GT(sim.reinit_count(), 0u);
  EXPECT_TRUE(sim.weights()->invariants_hold());
}

TEST(Simulation, RatesStayConsistentWithWeights) {
  Simulation sim(small_config(Backend::kReducedRejection, 200, 6));
  for (int i = 0; i < 20'000; ++i) sim.step();
  const auto rates = sim.system().rates();
  const auto p = sim.weights()->p();
  for (std::size_t i = 0; i < rates.size(); ++i) ASSERT_EQ(rates[i], p[i]);
}

TEST(Simulation, EfficiencyOrderingInSingularRegime) {
  std::vector<double> x(200);
  RngStream rng(9);
  for (double& v : x) v = rng.uniform_open();
  x[17] = 1e-4;  // s = 100, far above the mean rate of about 2
  std::uint64_t rr = 0;
  std::uint64_t ar = 0;
  {
    Simulation sim(small_config(Backend::kReducedRejection, x.size(), 1), x);
    for (int i = 0; i < 20'000; ++i) sim.step();
    rr = sim.proposals();
  }
  {
    Simulation sim(small_config(Backend::kAcceptanceRejection, x.size(), 1), x);
    for (int i = 0; i < 20'000; ++i) sim.step();
    ar = sim.proposals();
  }
  EXPECT_LT(rr, ar);
}

TEST(Simulation, FrozenStateRrUsesOneProposalPerIndex) {
  std::vector<double> x{0.5, 0.001, 0.2, 0.9};
  Simulation rr(small_config(Backend::kReducedRejection, 4), x);
  Simulation ar(small_config(Backend::kAcceptanceRejection, 4), x);
  std::uint64_t prr = 0;
  std::uint64_t par = 0;
  for (int i = 0; i < 10'000; ++i) {
    rr.select_index(prr);
    ar.select_index(par);
  }
  EXPECT_EQ(prr, 10'000u);
  EXPECT_GT(par, prr);
}

TEST(Simulation, SeededRunsAreIdentical) {
  for (auto backend : {Backend::kReducedRejection, Backend::kAcceptanceRejection}) {
    Simulation a(small_config(backend, 30, 12));
    Simulation b(small_config(backend, 30, 12));
    for (int i = 0; i < 5000; ++i) {
      const auto ea = a.step();
      const auto eb = b.step();
      ASSERT_EQ(ea.k, eb.k);
      ASSERT_EQ(ea.l, eb.l);
      ASSERT_EQ(ea.dt, eb.dt);
    }
    for (std::size_t i = 0; i < 30; ++i) ASSERT_EQ(a.system().state(i), b.system().state(i));
  }
}

TEST(Simulation, RunRecordsSeries) {
  Simulation sim(small_config(Backend::kReducedRejection, 20, 2));
  std::vector<Progress> seen;
  const auto result = sim.run(1000, 100, [&](const Progress& p) { seen.push_back(p); });
  ASSERT_EQ(seen.size(), 10u);
  EXPECT_EQ(seen.back().interactions, 1000u);
  EXPECT_EQ(result.sum.series.size(), 10u);
  EXPECT_DOUBLE_EQ(result.sum.series.back().running_mean, result.sum.mean);
  EXPECT_EQ(result.sum.count, 1000u);
  EXPECT_GE(result.selections, 2000u);
  EXPECT_GE(result.proposals, result.selections);
}

TEST(Simulation, AllowedSelfPairRefreshesOneParticle) {
  Config c = small_config(Backend::kAcceptanceRejection, 2, 4);
  c.self_pairs = SelfPairPolicy::kAllow;
  Simulation sim(c, {0.5, 1e-6});
  bool saw_self = false;
  for (int i = 0; i < 200 && !saw_self; ++i) {
    const double before_other = sim.system().state(0);
    const auto e = sim.step();
    if (e.k == e.l) {
      saw_self = true;
      if (e.k == 1) EXPECT_EQ(sim.system().state(0), before_other);
    }
  }
  EXPECT_TRUE(saw_self);
}

TEST(Simulation, StationaryMeanSmallSystem) {
  // N = 10, alpha = 0.5: E[sum] = 1.5/2.5 * 8 + 1 = 5.8.
  for (auto backend : {Backend::kReducedRejection, Backend::kAcceptanceRejection}) {
    double total = 0;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      Simulation sim(small_config(backend, 10, seed));
      total += sim.run(200'000, Observable::kSum, 0).mean;
    }
    EXPECT_NEAR(total / 4, expected_g(10, 0.5, Observable::kSum), 0.02 * 5.8);
  }
}

TEST(Bench, SlopeNeedsTwoPoints) {
  ScalingConfig config;
  config.base.n_particles = 100;
  config.checkpoints = {100};
  config.seeds = {1};
  const auto records = run_scaling(config, Backend::kReducedRejection);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(loglog_slope(records, 1).has_value());
}

TEST(Bench, RecordsAreCumulativeAndCountsReproducible) {
  ScalingConfig config;
  config.base.n_particles = 200;
  config.checkpoints = {100, 1000, 10'000};
  config.seeds = {1, 2};
  const auto a = run_scaling(config, Backend::kAcceptanceRejection);
  const auto b = run_scaling(config, Backend::kAcceptanceRejection);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].proposals, b[i].proposals);
    if (i > 0) {
      EXPECT_GE(a[i].mean_time_s, a[i - 1].mean_time_s);
      EXPECT_GT(a[i].mean_proposals, a[i - 1].mean_proposals);
    }
  }
  EXPECT_TRUE(loglog_slope(a, 100).has_value());
}

TEST(Bench, SlopeOfExactPowerLaw) {
  std::vector<BenchRecord> records(3);
  for (std::size_t i = 0; i < 3; ++i) {
    records[i].n_interactions = static_cast<std::uint64_t>(std::pow(10.0, 2.0 + i));
    records[i].mean_time_s = 3e-9 * std::pow(static_cast<double>(records[i].n_interactions), 1.5);
  }
  EXPECT_NEAR(*loglog_slope(records, 1), 1.5, 1e-12);
  EXPECT_NEAR(*loglog_slope(records, 1000), 1.5, 1e-12);
  EXPECT_FALSE(loglog_slope(records, 10'000).has_value());
}

}  // namespace
}  // namespace rrs::kmc
