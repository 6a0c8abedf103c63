#include <gtest/gtest.h>

#include "rrs/validation.hpp"

namespace rrs::validation {
namespace {

TEST(RandomTargets, RespectRegimesAndBounds) {
  RngStream rng(1);
  for (int i = 0; i < 2000; ++i) {
    const auto one = random_small_target(rng, Regime::kPAtLeastQ);
    const auto two = random_small_target(rng, Regime::kPBelowQ);
    const auto enc = random_small_target(rng, Regime::kEnclosing);
    ASSERT_GE(one.total_p(), one.total_q());
    ASSERT_LT(two.total_p(), two.total_q());
    ASSERT_EQ(enc.excess_count(), 0u);
    for (const auto* t : {&one, &two, &enc}) {
      ASSERT_GE(t->size(), 2u);
      ASSERT_LE(t->size(), 6u);
      ASSERT_GT(t->total_p(), 0.0);
      for (std::size_t k = 0; k < t->size(); ++k) {
        ASSERT_EQ(t->p_at(k), std::floor(t->p_at(k)));
        ASSERT_LE(t->p_at(k), 9.0);
        ASSERT_LE(t->q_at(k), 9.0);
      }
    }
  }
}

TEST(Suites, OracleSuiteCountsInstances) {
  const auto r = oracle_suite(5, 3);
  EXPECT_EQ(r.total, 5u);
  EXPECT_EQ(r.passed, 5u);
  EXPECT_TRUE(r.ok());
}

TEST(Suites, SmallGofSuitesPass) {
  GofConfig config;
  config.targets = 10;
  config.samples = 50'000;
  config.required_fraction = 0.8;
  for (auto kind : all_sampler_kinds()) {
    const auto r = gof_suite(kind, config);
    EXPECT_TRUE(r.ok()) << r.name << " " << r.passed << "/" << r.total;
  }
}

TEST(Suites, SeededSuitesAreDeterministic) {
  GofConfig config;
  config.targets = 5;
  config.samples = 10'000;
  config.parallelism = 2;
  const auto a = gof_suite(SamplerKind::kDynamicMarsaglia, config);
  const auto b = gof_suite(SamplerKind::kDynamicMarsaglia, config);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.detail, b.detail);
}

}  // namespace
}  // namespace rrs::validation
