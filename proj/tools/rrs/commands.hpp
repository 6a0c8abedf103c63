#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrs/output.hpp"

namespace rrs::cli {

enum ExitCode : int { kSuccess = 0, kAcceptanceFailure = 1, kUsageError = 2 };

/// Rejected configuration; reported on one line, exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::vector<std::uint64_t> seeds;
  std::string out;
  std::string format = "csv";
  unsigned parallelism = 0;  // 0: hardware concurrency

  Format output_format() const;
  unsigned workers() const;
  std::uint64_t first_seed() const { return seeds.front(); }
};

void add_common_options(CLI::App& app, CommonOptions& common,
                        std::vector<std::uint64_t> default_seeds);

struct ValidateOptions {
  CommonOptions common;
  std::size_t instances = 100;
  std::size_t targets = 100;
  std::uint64_t samples = 1'000'000;
  double significance = 0.001;
  std::vector<std::string> suites;
};

struct Example1Options {
  CommonOptions common;
  std::uint64_t samples = 1'000'000;
  std::size_t bins = 0;
};

struct KmcOptions {
  CommonOptions common;
  std::size_t n_particles = 100;
  double alpha = 0.5;
  std::uint64_t interactions = 1'000'000;
  std::size_t reinit_threshold = 0;
  std::vector<std::string> backends{"rr"};
  std::uint64_t record_every = 10'000;
  bool allow_self_pairs = false;
  std::string ar_bound = "periodic";
  std::string summary;
};

struct SsaOptions {
  CommonOptions common;
  std::string network;
  std::vector<std::string> backends{"direct"};
  double t_end = -1.0;
  std::uint64_t steps = 0;
  double sample_dt = 0.0;
  std::size_t replicas = 1;
  std::string summary;
};

struct BenchOptions {
  CommonOptions common;
  std::size_t n_particles = 10'000;
  double alpha = 0.5;
  std::size_t reinit_threshold = 4000;
  std::vector<std::uint64_t> checkpoints{100, 1'000, 10'000, 100'000, 1'000'000};
  std::vector<std::string> backends{"rr", "ar"};
  std::uint64_t min_n = 10'000;
  std::string ar_bound = "periodic";
};

void add_validate_options(CLI::App& app, ValidateOptions& o);
void add_example1_options(CLI::App& app, Example1Options& o);
void add_kmc_options(CLI::App& app, KmcOptions& o);
void add_ssa_options(CLI::App& app, SsaOptions& o);
void add_bench_options(CLI::App& app, BenchOptions& o);

int run_validate(const ValidateOptions& o);
int run_example1(const Example1Options& o);
int run_kmc(const KmcOptions& o);
int run_ssa(const SsaOptions& o);
int run_bench(const BenchOptions& o);

}  // namespace rrs::cli
