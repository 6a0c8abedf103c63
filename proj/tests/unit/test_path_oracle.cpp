#include <gtest/gtest.h>

#include "rrs/error.hpp"
#include "rrs/path_oracle.hpp"
#include "rrs/validation.hpp"

namespace rrs {
namespace {

TEST(PathOracle, SpecExamples) {
  const DiscreteTarget one({3, 1, 2}, {1, 2, 2});
  EXPECT_NEAR(path_probability_oracle(one, 0), 0.5, 1e-15);
  EXPECT_NEAR(path_probability_oracle(one, 1), 1.0 / 6, 1e-15);
  EXPECT_NEAR(path_probability_oracle(one, 2), 1.0 / 3, 1e-15);

  const DiscreteTarget two({2.5, 0.5}, {2, 2});
  EXPECT_NEAR(path_probability_oracle(two, 0), 5.0 / 6, 1e-15);
  EXPECT_NEAR(path_probability_oracle(two, 1), 1.0 / 6, 1e-15);
}

TEST(PathOracle, MatchesTargetOnRandomInstances) {
  RngStream rng(2024);
  for (int k = 0; k < 500; ++k) {
    const auto regime = k % 2 ? validation::Regime::kPBelowQ : validation::Regime::kPAtLeastQ;
    const auto t = validation::random_small_target(rng, regime);
    for (std::size_t z = 0; z < t.size(); ++z) {
      ASSERT_NEAR(path_probability_oracle(t, z), t.p_at(z) / t.total_p(), 1e-12);
    }
  }
}

TEST(PathOracle, ProbabilitiesSumToOne) {
  const DiscreteTarget t({0.1, 7, 0, 2.2}, {3, 1, 0.5, 2.2});
  double total = 0;
  for (std::size_t z = 0; z < t.size(); ++z) total += path_probability_oracle(t, z);
  EXPECT_NEAR(total, 1.0, 1e-14);
}

TEST(PathOracle, Errors) {
  const DiscreteTarget t({1, 1}, {1, 1});
  EXPECT_THROW(path_probability_oracle(t, 2), Error);
  const DiscreteTarget big(std::vector<double>(kOracleMaxSupport + 1, 1.0),
                           std::vector<double>(kOracleMaxSupport + 1, 1.0));
  try {
    path_probability_oracle(big, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedSize);
  }
}

}  // namespace
}  // namespace rrs
