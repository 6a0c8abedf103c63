#include <iostream>

#include "CLI11.hpp"
#include "rrs/commands.hpp"
#include "rrs/error.hpp"
#include "rrs/parallel.hpp"

namespace rrs::cli {

Format CommonOptions::output_format() const {
  const auto f = parse_format(format);
  if (!f) throw ConfigError("unknown format '" + format + "' (expected csv or json)");
  return *f;
}

unsigned CommonOptions::workers() const {
  return parallelism == 0 ? default_parallelism() : parallelism;
}

void add_common_options(CLI::App& app, CommonOptions& common,
                        std::vector<std::uint64_t> default_seeds) {
  common.seeds = std::move(default_seeds);
  app.add_option("--seed", common.seeds, "Seed list (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--out", common.out, "Output path (default stdout)");
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--parallelism", common.parallelism, "Worker threads (0: all cores)")
      ->capture_default_str();
}

}  // namespace rrs::cli

int main(int argc, char** argv) {
  using namespace rrs::cli;

  CLI::App app{"Reduced Rejection sampling: validation, examples and benchmarks"};
  app.require_subcommand(1);

  ValidateOptions validate;
  Example1Options example1;
  KmcOptions kmc;
  SsaOptions ssa;
  BenchOptions bench;

  auto* validate_cmd = app.add_subcommand("validate", "Oracle and goodness-of-fit suites");
  add_validate_options(*validate_cmd, validate);
  auto* example1_cmd = app.add_subcommand("example1", "Sample the singular mixture density");
  add_example1_options(*example1_cmd, example1);
  auto* kmc_cmd = app.add_subcommand("kmc", "Fluctuating-rate kinetic Monte Carlo");
  add_kmc_options(*kmc_cmd, kmc);
  auto* ssa_cmd = app.add_subcommand("ssa", "Stochastic simulation of a reaction network");
  add_ssa_options(*ssa_cmd, ssa);
  auto* bench_cmd = app.add_subcommand("bench", "Scaling benchmark of the kmc backends");
  add_bench_options(*bench_cmd, bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(validate);
    if (example1_cmd->parsed()) return run_example1(example1);
    if (kmc_cmd->parsed()) return run_kmc(kmc);
    if (ssa_cmd->parsed()) return run_ssa(ssa);
    if (bench_cmd->parsed()) return run_bench(bench);
  } catch (const ConfigError& e) {
    std::cerr << "rrs: error: " << e.what() << '\n';
    return kUsageError;
  } catch (const rrs::Error& e) {
    std::cerr << "rrs: error: " << e.what() << '\n';
    const auto code = e.code();
    const bool config = code == rrs::ErrorCode::kInvalidParams ||
                        code == rrs::ErrorCode::kInvalidNetwork ||
                        code == rrs::ErrorCode::kMalformedTarget;
    return config ? kUsageError : kAcceptanceFailure;
  } catch (const std::exception& e) {
    std::cerr << "rrs: error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
