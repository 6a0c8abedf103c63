#include <gtest/gtest.h>

#include <cmath>

#include "rrs/goodness_of_fit.hpp"
#include "rrs/rng.hpp"

// Reference numbers: tests/oracle/derive_values.py (mpmath / scipy).

namespace rrs::gof {
namespace {

TEST(ChiSquare, KnownStatisticAndPValue) {
  const std::vector<std::uint64_t> obs{30, 50, 20};
  const auto r = chi_square(obs, std::vector<double>{0.25, 0.5, 0.25});
  EXPECT_NEAR(r.statistic, 2.0, 1e-12);
  EXPECT_EQ(r.dof, 2.0);
  EXPECT_NEAR(r.p_value, 0.36787944117144245, 1e-12);
}

TEST(ChiSquare, ZeroProbabilityBins) {
  const auto ok = chi_square(std::vector<std::uint64_t>{30, 0, 70},
                             std::vector<double>{0.3, 0.0, 0.7});
  EXPECT_EQ(ok.dof, 1.0);
  EXPECT_NEAR(ok.statistic, 0.0, 1e-12);
  const auto bad = chi_square(std::vector<std::uint64_t>{30, 1, 69},
                              std::vector<double>{0.3, 0.0, 0.7});
  EXPECT_EQ(bad.p_value, 0.0);
}

TEST(ChiSquare, ExpectedCountsVariant) {
  const auto r = chi_square_expected(std::vector<std::uint64_t>{30, 50, 20},
                                     std::vector<double>{25, 50, 25});
  EXPECT_NEAR(r.statistic, 2.0, 1e-12);
}

TEST(ChiSquare, TwoSampleIdenticalHistograms) {
  const std::vector<std::uint64_t> a{10, 20, 30, 0};
  const auto r = chi_square_two_sample(a, a);
  EXPECT_NEAR(r.statistic, 0.0, 1e-12);
  EXPECT_EQ(r.dof, 2.0);
  EXPECT_NEAR(r.p_value, 1.0, 1e-12);
}

TEST(Kolmogorov, SurvivalFunction) {
  EXPECT_NEAR(kolmogorov_survival(0.5), 0.96394524366487509, 1e-12);
  EXPECT_NEAR(kolmogorov_survival(1.0), 0.26999967167735452, 1e-12);
  EXPECT_NEAR(kolmogorov_survival(1.36), 0.049485876755377884, 1e-12);
  EXPECT_EQ(kolmogorov_survival(0.0), 1.0);
}

TEST(Ks, StatisticOfKnownSample) {
  std::vector<double> xs{0.1, 0.4, 0.7};
  // Uniform CDF: max over i of (i/n - x_i, x_i - (i-1)/n) = 0.3 at x=0.7? no:
  // deviations are 0.1, 0.233.., 0.3, 0.066.., 0.366.., 0.033..  -> 1/3 - 0.1 = 0.2333,
  // 2/3 - 0.4 = 0.2667, 1 - 0.7 = 0.3.
  EXPECT_NEAR(ks_statistic(xs, [](double x) { return x; }), 0.3, 1e-15);
}

TEST(Ks, UniformSamplePasses) {
  RngStream rng(1);
  std::vector<double> xs(100'000);
  for (double& x : xs) x = rng.uniform();
  EXPECT_TRUE(ks_test(xs, [](double x) { return x; }).passes(0.001));
  std::vector<double> shifted(xs);
  for (double& x : shifted) x = x * x;
  EXPECT_FALSE(ks_test(shifted, [](double x) { return x; }).passes(0.001));
}

TEST(Ks, TwoSample) {
  RngStream rng(2);
  std::vector<double> a(20'000);
  std::vector<double> b(30'000);
  for (double& x : a) x = rng.uniform();
  for (double& x : b) x = rng.uniform();
  EXPECT_TRUE(ks_two_sample(a, b).passes(0.001));
  for (double& x : b) x = std::sqrt(x);
  EXPECT_FALSE(ks_two_sample(a, b).passes(0.001));
}

TEST(MeanEstimate, Basics) {
  const std::vector<double> v{1, 2, 3, 4};
  const auto m = mean_estimate(v);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.std_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
  EXPECT_EQ(m.count, 4u);
  EXPECT_NEAR(welch_z(m, m), 0.0, 1e-15);
}

}  // namespace
}  // namespace rrs::gof
