#include <cstdio>
#include <iostream>

#include "rrs/commands.hpp"
#include "rrs/validation.hpp"

namespace rrs::cli {
namespace {

constexpr std::string_view kOracleSuite = "oracle";

std::vector<std::string> known_suites() {
  std::vector<std::string> names{std::string(kOracleSuite)};
  for (auto kind : validation::all_sampler_kinds()) {
    names.emplace_back(validation::to_string(kind));
  }
  return names;
}

}  // namespace

void add_validate_options(CLI::App& app, ValidateOptions& o) {
  add_common_options(app, o.common, {20240601});
  app.add_option("--instances", o.instances, "Random targets for the oracle suite")
      ->capture_default_str();
  app.add_option("--targets", o.targets, "Random targets per goodness-of-fit suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--samples", o.samples, "Samples per target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--significance", o.significance, "Chi-square significance level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--suite", o.suites, "Suites to run (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(known_suites()));
}

int run_validate(const ValidateOptions& o) {
  const Format format = o.common.output_format();
  const auto wanted = [&](std::string_view name) {
    if (o.suites.empty()) return true;
    for (const auto& s : o.suites) {
      if (s == name) return true;
    }
    return false;
  };

  std::vector<validation::SuiteResult> results;
  if (wanted(kOracleSuite) && o.instances > 0) {
    results.push_back(validation::oracle_suite(o.instances, o.common.first_seed()));
  }
  validation::GofConfig gof;
  gof.targets = o.targets;
  gof.samples = o.samples;
  gof.significance = o.significance;
  gof.seed = o.common.first_seed();
  gof.parallelism = o.common.workers();
  for (auto kind : validation::all_sampler_kinds()) {
    if (wanted(validation::to_string(kind))) results.push_back(validation::gof_suite(kind, gof));
  }

  bool all_ok = true;
  std::printf("%-40s %9s %9s %7s %9s  %s\n", "suite", "passed", "required", "status",
              "seconds", "detail");
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    std::printf("%-40s %4zu/%-4zu %9zu %7s %9.2f  %s\n", r.name.c_str(), r.passed, r.total,
                r.required, r.ok() ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
  }
  std::fflush(stdout);

  if (!o.common.out.empty()) {
    OutputStream out(o.common.out);
    RecordWriter writer(out.get(), format,
                        {"suite", "passed", "total", "required", "status", "seconds", "detail"});
    for (const auto& r : results) {
      writer.row({r.name, std::uint64_t{r.passed}, std::uint64_t{r.total},
                  std::uint64_t{r.required}, std::string(r.ok() ? "pass" : "fail"), r.seconds,
                  r.detail});
    }
  }
  return all_ok ? kSuccess : kAcceptanceFailure;
}

}  // namespace rrs::cli
