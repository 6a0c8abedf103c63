#include "rrs/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/distributions/chi_squared.hpp>

#include "rrs/compensated_sum.hpp"
#include "rrs/error.hpp"

namespace rrs::gof {
namespace {

double chi_square_survival(double statistic, double dof) {
  if (dof <= 0.0) return 1.0;
  if (!std::isfinite(statistic)) return 0.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

TestResult chi_square_expected(std::span<const std::uint64_t> observed,
                               std::span<const double> expected_counts) {
  if (observed.size() != expected_counts.size()) {
    throw Error(ErrorCode::kInvalidParams, "histogram sizes differ");
  }
  TestResult result;
  CompensatedSum stat;
  int bins = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected_counts[i];
    const double o = static_cast<double>(observed[i]);
    if (e <= 0.0) {
      if (observed[i] != 0) {
        result.statistic = std::numeric_limits<double>::infinity();
        result.dof = std::max(0, bins - 1);
        result.p_value = 0.0;
        return result;
      }
      continue;
    }
    ++bins;
    stat.add((o - e) * (o - e) / e);
  }
  result.statistic = stat.value();
  result.dof = std::max(0, bins - 1);
  result.p_value = chi_square_survival(result.statistic, result.dof);
  return result;
}

TestResult chi_square(std::span<const std::uint64_t> observed,
                      std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) {
    throw Error(ErrorCode::kInvalidParams, "histogram sizes differ");
  }
  double n = 0.0;
  for (auto o : observed) n += static_cast<double>(o);
  const double mass = compensated_sum(probabilities);
  std::vector<double> expected(observed.size());
  for (std::size_t i = 0; i < observed.size(); ++i) {
    expected[i] = n * probabilities[i] / mass;
  }
  return chi_square_expected(observed, expected);
}

TestResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidParams, "histogram sizes differ");
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]);
  }
  TestResult result;
  if (na == 0.0 || nb == 0.0) return result;
  // Standard form for unequal sample sizes.
  const double ka = std::sqrt(nb / na);
  const double kb = std::sqrt(na / nb);
  CompensatedSum stat;
  int bins = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = static_cast<double>(a[i]);
    const double y = static_cast<double>(b[i]);
    if (x + y == 0.0) continue;
    ++bins;
    const double d = ka * x - kb * y;
    stat.add(d * d / (x + y));
  }
  result.statistic = stat.value();
  result.dof = std::max(0, bins - 1);
  result.p_value = chi_square_survival(result.statistic, result.dof);
  return result;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;  // series converges slowly; Q is 1 to 1e-20 here
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

TestResult ks_test(std::vector<double>& samples, const std::function<double(double)>& cdf) {
  TestResult result;
  if (samples.empty()) return result;
  result.statistic = ks_statistic(samples, cdf);
  const double sn = std::sqrt(static_cast<double>(samples.size()));
  result.p_value = kolmogorov_survival((sn + 0.12 + 0.11 / sn) * result.statistic);
  return result;
}

TestResult ks_two_sample(std::vector<double>& a, std::vector<double>& b) {
  TestResult result;
  if (a.empty() || b.empty()) return result;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  result.statistic = d;
  const double ne = std::sqrt(na * nb / (na + nb));
  result.p_value = kolmogorov_survival((ne + 0.12 + 0.11 / ne) * d);
  return result;
}

MeanEstimate mean_estimate(std::span<const double> values) {
  MeanEstimate est;
  est.count = values.size();
  if (values.empty()) return est;
  const double n = static_cast<double>(values.size());
  est.mean = compensated_sum(values) / n;
  if (values.size() > 1) {
    CompensatedSum ss;
    for (double v : values) ss.add((v - est.mean) * (v - est.mean));
    est.std_error = std::sqrt(ss.value() / (n - 1.0) / n);
  }
  return est;
}

double welch_z(const MeanEstimate& a, const MeanEstimate& b) {
  const double se = std::hypot(a.std_error, b.std_error);
  if (se == 0.0) return a.mean == b.mean ? 0.0 : std::numeric_limits<double>::infinity();
  return (a.mean - b.mean) / se;
}

}  // namespace rrs::gof
