#include <chrono>
#include <cmath>
#include <cstdio>

#include "rrs/commands.hpp"
#include "rrs/kmc.hpp"
#include "rrs/parallel.hpp"

namespace rrs::cli {
namespace {

struct ReplicaOutput {
  std::vector<std::vector<Cell>> rows;
  kmc::RunResult result;
  double wall_s = 0.0;
};

double variance(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(v.size() - 1);
}

}  // namespace

void add_kmc_options(CLI::App& app, KmcOptions& o) {
  add_common_options(app, o.common, {1, 2, 3, 4, 5});
  app.add_option("--n-particles,-N", o.n_particles, "Number of particles")
      ->capture_default_str();
  app.add_option("--alpha", o.alpha, "Rate exponent in (0,1)")->capture_default_str();
  app.add_option("--interactions,-n", o.interactions, "Interactions per replica")
      ->capture_default_str();
  app.add_option("--reinit-threshold,-M", o.reinit_threshold,
                 "Excess-set size that triggers reinitialization (0: ceil(4 sqrt N))")
      ->capture_default_str();
  app.add_option("--backend", o.backends, "Selection backends (rr, ar)")
      ->delimiter(',')
      ->check(CLI::IsMember({"rr", "ar"}))
      ->capture_default_str();
  app.add_option("--record-every", o.record_every, "Series decimation (0: final only)")
      ->capture_default_str();
  app.add_flag("--allow-self-pairs", o.allow_self_pairs,
               "Draw k and l independently, allowing k == l");
  app.add_option("--ar-bound", o.ar_bound, "AR proposal height maintenance")
      ->check(CLI::IsMember({"periodic", "monotone"}))
      ->capture_default_str();
  app.add_option("--summary", o.summary, "Per-backend summary output path");
}

int run_kmc(const KmcOptions& o) {
  const Format format = o.common.output_format();
  kmc::Config base;
  base.n_particles = o.n_particles;
  base.alpha = o.alpha;
  base.reinit_threshold = o.reinit_threshold;
  base.self_pairs =
      o.allow_self_pairs ? kmc::SelfPairPolicy::kAllow : kmc::SelfPairPolicy::kRedrawPair;
  base.ar_bound = o.ar_bound == "monotone" ? kmc::ArBoundPolicy::kMonotone
                                           : kmc::ArBoundPolicy::kPeriodicRecompute;
  base.validate();
  if (o.interactions == 0) throw ConfigError("--interactions must be positive");

  std::vector<kmc::Backend> backends;
  for (const auto& name : o.backends) backends.push_back(*kmc::parse_backend(name));

  const double expected_sum = kmc::expected_g(o.n_particles, o.alpha, kmc::Observable::kSum);
  const double expected_sq =
      kmc::expected_g(o.n_particles, o.alpha, kmc::Observable::kSumOfSquares);

  OutputStream out(o.common.out);
  RecordWriter series(out.get(), format,
                      {"backend", "seed", "interaction_count", "running_mean",
                       "running_mean_sum_of_squares", "wall_time_ns", "proposals_total",
                       "reinit_count"});
  std::optional<OutputStream> summary_out;
  std::optional<RecordWriter> summary;
  if (!o.summary.empty()) {
    summary_out.emplace(o.summary);
    summary.emplace(summary_out->get(), format,
                    std::vector<std::string>{
                        "backend", "replicas", "n_particles", "alpha", "n_interactions",
                        "estimate_sum", "expected_sum", "rel_error_sum",
                        "estimate_sum_of_squares", "expected_sum_of_squares",
                        "rel_error_sum_of_squares", "mean_time_s", "time_variance",
                        "mean_proposals", "mean_reinit_count"});
  }

  for (const auto backend : backends) {
    const std::string tag(kmc::to_string(backend));
    std::vector<ReplicaOutput> replicas(o.common.seeds.size());
    parallel_for(replicas.size(), o.common.workers(), [&](std::size_t r) {
      kmc::Config config = base;
      config.backend = backend;
      config.seed = o.common.seeds[r];
      auto& rep = replicas[r];
      const auto start = std::chrono::steady_clock::now();
      kmc::Simulation sim(config);
      const auto record = [&](const kmc::Progress& p) {
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        rep.rows.push_back({tag, config.seed, p.interactions, p.mean_sum,
                            p.mean_sum_of_squares, static_cast<std::int64_t>(ns), p.proposals,
                            p.reinit_count});
      };
      rep.result = sim.run(o.interactions, o.record_every, record);
      rep.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (o.record_every == 0 || o.interactions % o.record_every != 0) {
        record({.interactions = sim.interactions(),
                .mean_sum = rep.result.sum.mean,
                .mean_sum_of_squares = rep.result.sum_of_squares.mean,
                .proposals = rep.result.proposals,
                .reinit_count = rep.result.reinit_count});
      }
    });

    double est_sum = 0.0;
    double est_sq = 0.0;
    double proposals = 0.0;
    double reinits = 0.0;
    std::vector<double> times;
    for (const auto& rep : replicas) {
      for (const auto& row : rep.rows) series.row(row);
      est_sum += rep.result.sum.mean;
      est_sq += rep.result.sum_of_squares.mean;
      proposals += static_cast<double>(rep.result.proposals);
      reinits += static_cast<double>(rep.result.reinit_count);
      times.push_back(rep.wall_s);
    }
    const double count = static_cast<double>(replicas.size());
    est_sum /= count;
    est_sq /= count;
    double mean_time = 0.0;
    for (double t : times) mean_time += t / count;
    const double rel_sum = (est_sum - expected_sum) / expected_sum;
    const double rel_sq = (est_sq - expected_sq) / expected_sq;

    std::fprintf(stderr,
                 "%s: sum %.6g (expected %.6g, rel err %+.3f%%), sum of squares %.6g "
                 "(expected %.6g, rel err %+.3f%%), %zu replicas\n",
                 tag.c_str(), est_sum, expected_sum, 100.0 * rel_sum, est_sq, expected_sq,
                 100.0 * rel_sq, replicas.size());
    if (summary) {
      summary->row({tag, std::uint64_t{replicas.size()}, std::uint64_t{o.n_particles}, o.alpha,
                    o.interactions, est_sum, expected_sum, rel_sum, est_sq, expected_sq, rel_sq,
                    mean_time, variance(times), proposals / count, reinits / count});
    }
  }
  return kSuccess;
}

}  // namespace rrs::cli
