#include <chrono>
#include <cmath>
#include <cstdio>

#include "rrs/commands.hpp"
#include "rrs/goodness_of_fit.hpp"
#include "rrs/network_io.hpp"
#include "rrs/parallel.hpp"
#include "rrs/ssa.hpp"

namespace rrs::cli {
namespace {

struct ReplicaOutput {
  std::vector<ssa::TrajectoryPoint> points;
  std::uint64_t proposals = 0;
  std::uint64_t selections = 0;
  double wall_s = 0.0;
};

}  // namespace

void add_ssa_options(CLI::App& app, SsaOptions& o) {
  add_common_options(app, o.common, {1});
  app.add_option("--network", o.network, "Reaction network JSON file")->required();
  app.add_option("--backend", o.backends, "Selection backends (direct, ar, rr)")
      ->delimiter(',')
      ->check(CLI::IsMember({"direct", "ar", "rr"}))
      ->capture_default_str();
  auto* t_end = app.add_option("--t-end,-T", o.t_end, "Simulated end time");
  auto* steps = app.add_option("--steps", o.steps, "Number of reaction events");
  t_end->excludes(steps);
  app.add_option("--sample-dt", o.sample_dt,
                 "Recording interval for --t-end (0: initial and final state only)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--replicas,-R", o.replicas, "Replicas per backend")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--summary", o.summary, "Per-backend summary output path");
}

int run_ssa(const SsaOptions& o) {
  const Format format = o.common.output_format();
  const bool by_time = o.t_end >= 0.0;
  if (!by_time && o.steps == 0) throw ConfigError("one of --t-end or --steps is required");
  const auto network = ssa::load_network(o.network);

  std::vector<std::string> columns{"backend", "replica", "t"};
  for (const auto& name : network.species_names()) columns.push_back(name);
  std::vector<std::string> summary_columns{"backend", "replicas", "mean_proposals_per_selection",
                                           "wall_time_s"};
  for (const auto& name : network.species_names()) {
    summary_columns.push_back("mean_final_" + name);
    summary_columns.push_back("se_final_" + name);
  }

  OutputStream out(o.common.out);
  RecordWriter trajectories(out.get(), format, columns);
  std::optional<OutputStream> summary_out;
  std::optional<RecordWriter> summary;
  if (!o.summary.empty()) {
    summary_out.emplace(o.summary);
    summary.emplace(summary_out->get(), format, summary_columns);
  }

  for (const auto& name : o.backends) {
    const auto backend = *ssa::parse_backend(name);
    std::vector<ReplicaOutput> replicas(o.replicas);
    const auto start = std::chrono::steady_clock::now();
    parallel_for(o.replicas, o.common.workers(), [&](std::size_t r) {
      auto& rep = replicas[r];
      const auto t0 = std::chrono::steady_clock::now();
      ssa::Simulator sim(network, backend, derive_seed(o.common.first_seed(), r));
      if (by_time) {
        const double dt = o.sample_dt > 0.0 ? o.sample_dt : o.t_end - sim.time();
        rep.points = sim.run_until(o.t_end, dt).points;
      } else {
        rep.points.push_back({sim.time(), {sim.counts().begin(), sim.counts().end()}});
        for (std::uint64_t s = 0; s < o.steps && !sim.exhausted(); ++s) sim.step();
        rep.points.push_back({sim.time(), {sim.counts().begin(), sim.counts().end()}});
      }
      rep.proposals = sim.proposals();
      rep.selections = sim.selections();
      rep.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::uint64_t proposals = 0;
    std::uint64_t selections = 0;
    std::vector<std::vector<double>> finals(network.species_count());
    for (std::size_t r = 0; r < replicas.size(); ++r) {
      const auto& rep = replicas[r];
      for (const auto& p : rep.points) {
        std::vector<Cell> row{name, std::uint64_t{r}, p.t};
        for (auto c : p.counts) row.emplace_back(std::int64_t{c});
        trajectories.row(row);
      }
      proposals += rep.proposals;
      selections += rep.selections;
      if (!rep.points.empty()) {
        for (std::size_t i = 0; i < finals.size(); ++i) {
          finals[i].push_back(static_cast<double>(rep.points.back().counts[i]));
        }
      }
    }
    const double per_selection =
        selections ? static_cast<double>(proposals) / static_cast<double>(selections) : 0.0;
    std::fprintf(stderr, "%s: %zu replicas, %.4g proposals per selection, %.3f s\n",
                 name.c_str(), replicas.size(), per_selection, wall);
    std::vector<Cell> row{name, std::uint64_t{replicas.size()}, per_selection, wall};
    for (std::size_t i = 0; i < finals.size(); ++i) {
      const auto est = gof::mean_estimate(finals[i]);
      std::fprintf(stderr, "  final %s: mean %.6g (se %.3g)\n",
                   network.species_names()[i].c_str(), est.mean, est.std_error);
      row.emplace_back(est.mean);
      row.emplace_back(est.std_error);
    }
    if (summary) summary->row(row);
  }
  return kSuccess;
}

}  // namespace rrs::cli
