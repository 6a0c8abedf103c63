#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "rrs/error.hpp"
#include "rrs/singular_mixture.hpp"

namespace rrs::singular {
namespace {

TEST(Singular, Constants) {
  EXPECT_EQ(kTotalQ, 2.0);
  EXPECT_EQ(kExcessTotal, 1.25);
  EXPECT_EQ(kTotalP, kTotalQ + kExcessTotal);
  const auto& t = target();
  EXPECT_EQ(t.total_p(), 3.25);
  EXPECT_EQ(t.total_q(), 2.0);
  EXPECT_EQ(t.excess_total(), 1.25);
  for (double x : {1e-12, 0.1, 0.5, 0.9, 1 - 1e-12}) EXPECT_TRUE(t.in_excess(x));
}

TEST(Singular, DensityAndCdf) {
  EXPECT_NEAR(density(0.25), 2.0 + std::pow(0.75, -0.2), 1e-15);
  EXPECT_NEAR(proposal_density(0.25), 2.0, 1e-15);
  EXPECT_EQ(cdf(0.0), 0.0);
  EXPECT_NEAR(cdf(1.0), 1.0, 1e-15);
  EXPECT_NEAR(cdf(0.25), 0.38676235354361185, 1e-15);
  EXPECT_NEAR(mean(), 49.0 / 117.0, 1e-15);
}

TEST(Singular, InverseTransforms) {
  EXPECT_EQ(inv_sqrt_from_uniform(0.25), 0.0625);
  EXPECT_NEAR(excess_quintic_from_uniform(0.5), 0.5795517923731428, 1e-15);
  EXPECT_EQ(excess_quintic_from_uniform(0.0), 0.0);
}

TEST(Singular, ComponentSamplersMatchTheirCdfs) {
  RngStream rng(1);
  std::vector<double> a(200'000);
  std::vector<double> b(200'000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = sample_inv_sqrt(rng);
    b[i] = sample_excess_quintic(rng);
    ASSERT_GT(a[i], 0.0);
    ASSERT_LT(a[i], 1.0);
    ASSERT_GT(b[i], 0.0);
    ASSERT_LT(b[i], 1.0);
  }
  EXPECT_TRUE(gof::ks_test(a, [](double x) { return std::sqrt(x); }).passes(test::kSignificance));
  EXPECT_TRUE(gof::ks_test(b, [](double x) { return 1 - std::pow(1 - x, 0.8); })
                  .passes(test::kSignificance));
}

TEST(Singular, MixtureHasNoRejectionsAndMatchesTarget) {
  RngStream rng(2);
  const std::uint64_t n = 1'000'000;
  std::vector<double> xs(n);
  std::uint64_t excess = 0;
  double sum = 0;
  double sum2 = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto r = sample_mixture(rng);
    ASSERT_NE(r.branch, Branch::kReplacedByExcess);
    ASSERT_LE(r.proposals_used, 1u);
    excess += r.branch == Branch::kExcessDirect;
    xs[i] = r.value;
    sum += r.value;
    sum2 += r.value * r.value;
  }
  const double dn = static_cast<double>(n);
  const double m = sum / dn;
  const double var = sum2 / dn - m * m;
  EXPECT_NEAR(m, 49.0 / 117.0, 4 * std::sqrt(var / dn));
  EXPECT_NEAR(sum2 / dn, 0.2757020757020757, 0.002);
  const double pe = 5.0 / 13.0;
  EXPECT_NEAR(static_cast<double>(excess) / dn, pe, 3 * std::sqrt(pe * (1 - pe) / dn));
  EXPECT_LT(gof::ks_statistic(xs, cdf), 1.95 / std::sqrt(dn));
}

TEST(MixtureSampler, ThreeComponents) {
  // x^(-1/2) + (1-x)^(-1/5) + 1 on (0, 1).
  MixtureSampler sampler({{2.0, sample_inv_sqrt},
                          {1.25, sample_excess_quintic},
                          {1.0, [](RngStream& r) { return r.uniform_open(); }}});
  EXPECT_EQ(sampler.total_mass(), 4.25);
  RngStream rng(3);
  std::vector<double> xs(200'000);
  for (double& x : xs) {
    const auto r = sampler.sample(rng);
    ASSERT_NE(r.branch, Branch::kReplacedByExcess);
    x = r.value;
  }
  const auto mixed_cdf = [](double x) {
    return (2 * std::sqrt(x) + 1.25 * (1 - std::pow(1 - x, 0.8)) + x) / 4.25;
  };
  EXPECT_TRUE(gof::ks_test(xs, mixed_cdf).passes(test::kSignificance));
}

TEST(MixtureSampler, Errors) {
  EXPECT_THROW(MixtureSampler({{1.0, sample_inv_sqrt}}), Error);
  EXPECT_THROW(MixtureSampler({{1.0, sample_inv_sqrt}, {0.0, sample_inv_sqrt}}), Error);
}

}  // namespace
}  // namespace rrs::singular
