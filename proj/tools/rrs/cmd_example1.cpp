#include <cmath>
#include <cstdio>

#include "rrs/commands.hpp"
#include "rrs/goodness_of_fit.hpp"
#include "rrs/singular_mixture.hpp"

namespace rrs::cli {

void add_example1_options(CLI::App& app, Example1Options& o) {
  add_common_options(app, o.common, {1});
  app.add_option("--samples,-n", o.samples, "Number of draws")->capture_default_str();
  app.add_option("--bins", o.bins, "Histogram bins on (0,1); 0 writes raw samples")
      ->capture_default_str();
}

int run_example1(const Example1Options& o) {
  const Format format = o.common.output_format();
  OutputStream out(o.common.out);

  RngStream rng(o.common.first_seed());
  std::vector<double> values;
  values.reserve(o.samples);
  std::uint64_t rejections = 0;
  std::uint64_t excess = 0;
  {
    std::optional<RecordWriter> raw;
    if (o.bins == 0) raw.emplace(out.get(), format, std::vector<std::string>{"index", "value", "branch"});
    for (std::uint64_t i = 0; i < o.samples; ++i) {
      const auto rec = singular::sample_mixture(rng);
      if (rec.branch == Branch::kReplacedByExcess) ++rejections;
      if (rec.branch == Branch::kExcessDirect || rec.branch == Branch::kReplacedByExcess) {
        ++excess;
      }
      values.push_back(rec.value);
      if (raw) raw->row({i, rec.value, std::string(to_string(rec.branch))});
    }
  }

  if (o.bins > 0) {
    std::vector<std::uint64_t> counts(o.bins, 0);
    for (double x : values) {
      const auto b = static_cast<std::size_t>(x * static_cast<double>(o.bins));
      ++counts[std::min(b, o.bins - 1)];
    }
    RecordWriter hist(out.get(), format, {"bin_lo", "bin_hi", "count", "expected"});
    for (std::size_t b = 0; b < o.bins; ++b) {
      const double lo = static_cast<double>(b) / static_cast<double>(o.bins);
      const double hi = static_cast<double>(b + 1) / static_cast<double>(o.bins);
      const double expected =
          static_cast<double>(o.samples) * (singular::cdf(hi) - singular::cdf(lo));
      hist.row({lo, hi, counts[b], expected});
    }
  }

  if (o.samples == 0) return kSuccess;

  const double n = static_cast<double>(o.samples);
  const auto ks = gof::ks_test(values, singular::cdf);
  const double threshold = 1.95 / std::sqrt(n);
  const double p_excess = singular::kExcessTotal / singular::kTotalP;
  const double fraction = static_cast<double>(excess) / n;
  const double sigma = std::sqrt(p_excess * (1.0 - p_excess) / n);
  const bool ks_ok = ks.statistic < threshold;
  const bool fraction_ok = std::abs(fraction - p_excess) <= 3.0 * sigma;

  std::fprintf(stderr,
               "samples %llu\nks_statistic %.6g (threshold %.6g, p-value %.4g) %s\n"
               "rejections %llu %s\nexcess_fraction %.6f (expected %.6f, sigma %.2g) %s\n",
               static_cast<unsigned long long>(o.samples), ks.statistic, threshold, ks.p_value,
               ks_ok ? "ok" : "FAIL", static_cast<unsigned long long>(rejections),
               rejections == 0 ? "ok" : "FAIL", fraction, p_excess, sigma,
               fraction_ok ? "ok" : "FAIL");
  return ks_ok && rejections == 0 && fraction_ok ? kSuccess : kAcceptanceFailure;
}

}  // namespace rrs::cli
