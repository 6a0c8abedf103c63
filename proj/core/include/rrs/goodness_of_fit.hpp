#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rrs::gof {

struct TestResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;

  bool passes(double significance) const noexcept { return p_value >= significance; }
};

/// Pearson chi-square of observed counts against probabilities. Bins with
/// zero probability do not add degrees of freedom; any count in one makes
/// the test fail outright (p = 0).
TestResult chi_square(std::span<const std::uint64_t> observed,
                      std::span<const double> probabilities);

/// Same, against expected counts that need not come from one multinomial
/// (e.g. summed over segments with different probabilities).
TestResult chi_square_expected(std::span<const std::uint64_t> observed,
                               std::span<const double> expected_counts);

/// Two-sample chi-square test of homogeneity on paired histograms.
TestResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b);

/// Kolmogorov survival function Q(lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F|; sorts `samples`.
double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf);

/// One-sample KS test with the asymptotic p-value (Stephens' correction).
TestResult ks_test(std::vector<double>& samples, const std::function<double(double)>& cdf);

/// Two-sample KS test; sorts both inputs.
TestResult ks_two_sample(std::vector<double>& a, std::vector<double>& b);

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

MeanEstimate mean_estimate(std::span<const double> values);

/// Welch two-sample z statistic for equal means.
double welch_z(const MeanEstimate& a, const MeanEstimate& b);

}  // namespace rrs::gof
