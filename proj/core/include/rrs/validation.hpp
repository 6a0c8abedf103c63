#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rrs/rng.hpp"
#include "rrs/target.hpp"

namespace rrs::validation {

/// Which mass relation a random target must satisfy.
enum class Regime {
  kAny,
  kPAtLeastQ,  // I[p] >= I[q]
  kPBelowQ,    // I[p] < I[q]
  kEnclosing,  // p_i <= q_i for every i
};

/// Random target with 2..max_support points and integer weights in [0, 9],
/// I[p] > 0, satisfying `regime`.
DiscreteTarget random_small_target(RngStream& rng, Regime regime,
                                   std::size_t max_support = 6);

enum class SamplerKind {
  kAlgorithmOne,
  kAlgorithmTwo,
  kAcceptanceRejection,
  kDynamicMarsaglia,  // DynamicWeights::sample with interleaved updates
  kDynamicAlias,
  kMarsagliaTable,
  kAliasTable,
};

std::string_view to_string(SamplerKind kind) noexcept;
std::vector<SamplerKind> all_sampler_kinds();

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::size_t required = 0;
  double seconds = 0.0;
  std::string detail;

  bool ok() const noexcept { return passed >= required; }
};

/// Path-probability oracle vs p_z / I[p] (tolerance 1e-12) on `instances`
/// random targets alternating between the two mass regimes. Every instance
/// must pass.
SuiteResult oracle_suite(std::size_t instances, std::uint64_t seed);

struct GofConfig {
  std::size_t targets = 100;
  std::uint64_t samples = 1'000'000;
  double significance = 0.001;
  double required_fraction = 0.95;
  std::uint64_t seed = 20240601;
  unsigned parallelism = 1;
};

/// Chi-square goodness of fit of `kind` on random small targets; passes when
/// at least required_fraction of the targets pass at the significance level.
/// Algorithm I targets additionally fail if any call used more than one
/// q-draw or more than one excess draw.
SuiteResult gof_suite(SamplerKind kind, const GofConfig& config);

}  // namespace rrs::validation
