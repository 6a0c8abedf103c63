#include <cstdio>

#include "rrs/commands.hpp"
#include "rrs/kmc_bench.hpp"

namespace rrs::cli {

void add_bench_options(CLI::App& app, BenchOptions& o) {
  add_common_options(app, o.common, {1, 2, 3, 4, 5});
  app.add_option("--n-particles,-N", o.n_particles, "Number of particles")
      ->capture_default_str();
  app.add_option("--alpha", o.alpha, "Rate exponent in (0,1)")->capture_default_str();
  app.add_option("--reinit-threshold,-M", o.reinit_threshold, "Reinitialization threshold")
      ->capture_default_str();
  app.add_option("--checkpoints", o.checkpoints, "Interaction counts to record")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--backend", o.backends, "Selection backends (rr, ar)")
      ->delimiter(',')
      ->check(CLI::IsMember({"rr", "ar"}))
      ->capture_default_str();
  app.add_option("--slope-min-n", o.min_n, "Smallest n used in the log-log slope")
      ->capture_default_str();
  app.add_option("--ar-bound", o.ar_bound, "AR proposal height maintenance")
      ->check(CLI::IsMember({"periodic", "monotone"}))
      ->capture_default_str();
}

int run_bench(const BenchOptions& o) {
  const Format format = o.common.output_format();
  kmc::ScalingConfig config;
  config.base.n_particles = o.n_particles;
  config.base.alpha = o.alpha;
  config.base.reinit_threshold = o.reinit_threshold;
  config.base.ar_bound = o.ar_bound == "monotone" ? kmc::ArBoundPolicy::kMonotone
                                                  : kmc::ArBoundPolicy::kPeriodicRecompute;
  config.base.validate();
  config.checkpoints = o.checkpoints;
  config.seeds = o.common.seeds;
  if (config.checkpoints.empty()) throw ConfigError("--checkpoints must not be empty");
  for (std::size_t i = 0; i < config.checkpoints.size(); ++i) {
    if (config.checkpoints[i] == 0 || (i > 0 && config.checkpoints[i] <= config.checkpoints[i - 1])) {
      throw ConfigError("--checkpoints must be positive and strictly increasing");
    }
  }

  OutputStream out(o.common.out);
  RecordWriter writer(out.get(), format,
                      {"n", "method", "mean_time_s", "time_variance", "mean_proposals",
                       "mean_reinit_count"});
  for (const auto& name : o.backends) {
    const auto method = *kmc::parse_backend(name);
    const auto records = kmc::run_scaling(config, method);
    for (const auto& r : records) {
      writer.row({r.n_interactions, name, r.mean_time_s, r.time_variance, r.mean_proposals,
                  r.mean_reinit_count});
    }
    const auto slope = kmc::loglog_slope(records, o.min_n);
    if (slope) {
      std::fprintf(stderr, "%s: slope %.4f over n >= %llu\n", name.c_str(), *slope,
                   static_cast<unsigned long long>(o.min_n));
    } else {
      std::fprintf(stderr, "%s: slope NA over n >= %llu\n", name.c_str(),
                   static_cast<unsigned long long>(o.min_n));
    }
  }
  return kSuccess;
}

}  // namespace rrs::cli
