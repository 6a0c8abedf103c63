#include "rrs/validation.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "rrs/alias_table.hpp"
#include "rrs/dynamic_weights.hpp"
#include "rrs/goodness_of_fit.hpp"
#include "rrs/marsaglia_table.hpp"
#include "rrs/parallel.hpp"
#include "rrs/path_oracle.hpp"
#include "rrs/reduced_rejection.hpp"

namespace rrs::validation {
namespace {

double digit(RngStream& rng) { return static_cast<double>(rng.uniform_index(10)); }

std::vector<double> random_weights(RngStream& rng, std::size_t n) {
  std::vector<double> w(n);
  do {
    for (double& x : w) x = digit(rng);
  } while (compensated_sum(w) == 0.0);
  return w;
}

bool regime_holds(const DiscreteTarget& t, Regime regime) {
  switch (regime) {
    case Regime::kAny: return true;
    case Regime::kPAtLeastQ: return t.total_p() >= t.total_q();
    case Regime::kPBelowQ: return t.total_p() < t.total_q();
    case Regime::kEnclosing: return t.excess_count() == 0;
  }
  return false;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TargetOutcome {
  bool passed = false;
  double p_value = 0.0;
};

// Expected counts and observed counts for one random instance of `kind`.
TargetOutcome run_instance(SamplerKind kind, std::uint64_t instance_seed,
                           std::uint64_t samples, double significance) {
  RngStream rng(instance_seed);
  const std::size_t max_support = 6;
  std::vector<std::uint64_t> observed;
  std::vector<double> expected;
  bool structural_ok = true;

  auto fixed_target_run = [&](const DiscreteTarget& target, auto&& draw) {
    observed.assign(target.size(), 0);
    expected.resize(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
      expected[i] = static_cast<double>(samples) * target.p_at(i) / target.total_p();
    }
    for (std::uint64_t s = 0; s < samples; ++s) ++observed[draw(target)];
  };

  switch (kind) {
    case SamplerKind::kAlgorithmOne: {
      const auto target = random_small_target(rng, Regime::kPAtLeastQ, max_support);
      fixed_target_run(target, [&](const DiscreteTarget& t) {
        const auto rec = algorithm_one(t, rng);
        if (rec.proposals_used > 1 || rec.excess_draws > 1) structural_ok = false;
        return rec.value;
      });
      break;
    }
    case SamplerKind::kAlgorithmTwo: {
      const auto target = random_small_target(rng, Regime::kPBelowQ, max_support);
      fixed_target_run(target,
                       [&](const DiscreteTarget& t) { return algorithm_two(t, rng).value; });
      break;
    }
    case SamplerKind::kAcceptanceRejection: {
      const auto target = random_small_target(rng, Regime::kEnclosing, max_support);
      fixed_target_run(target, [&](const DiscreteTarget& t) {
        return acceptance_rejection_sample(t, rng).value;
      });
      break;
    }
    case SamplerKind::kMarsagliaTable:
    case SamplerKind::kAliasTable: {
      const auto w = random_weights(rng, 2 + rng.uniform_index(max_support - 1));
      const double total = compensated_sum(w);
      observed.assign(w.size(), 0);
      expected.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        expected[i] = static_cast<double>(samples) * w[i] / total;
      }
      if (kind == SamplerKind::kMarsagliaTable) {
        const MarsagliaTable table(w);
        for (std::uint64_t s = 0; s < samples; ++s) ++observed[table.sample(rng)];
      } else {
        const AliasTable table(w);
        for (std::uint64_t s = 0; s < samples; ++s) ++observed[table.sample(rng)];
      }
      break;
    }
    case SamplerKind::kDynamicMarsaglia:
    case SamplerKind::kDynamicAlias: {
      // Ten segments; one or two random weight updates before each of the
      // last nine. Expected counts are summed over segments.
      const std::size_t n = 2 + rng.uniform_index(max_support - 1);
      DynamicWeightsOptions options;
      options.reinit_threshold = 1 + rng.uniform_index(3);
      options.table = kind == SamplerKind::kDynamicMarsaglia ? TableBackend::kMarsaglia
                                                             : TableBackend::kAlias;
      DynamicWeights dw(random_weights(rng, n), options);
      observed.assign(n, 0);
      expected.assign(n, 0.0);
      constexpr int kSegments = 10;
      for (int seg = 0; seg < kSegments; ++seg) {
        if (seg > 0) {
          const std::size_t updates = 1 + rng.uniform_index(2);
          for (std::size_t u = 0; u < updates; ++u) {
            const std::size_t i = rng.uniform_index(n);
            double w = digit(rng);
            if (w == 0.0 && dw.total_p() == dw.p_at(i)) w = 1.0;
            dw.update_weight(i, w);
          }
        }
        const std::uint64_t seg_samples =
            samples / kSegments + (seg == kSegments - 1 ? samples % kSegments : 0);
        const double total = compensated_sum(dw.p());
        for (std::size_t i = 0; i < n; ++i) {
          expected[i] += static_cast<double>(seg_samples) * dw.p_at(i) / total;
        }
        for (std::uint64_t s = 0; s < seg_samples; ++s) ++observed[dw.sample(rng).value];
        if (!dw.invariants_hold()) structural_ok = false;
      }
      break;
    }
  }

  const auto test = gof::chi_square_expected(observed, expected);
  return {structural_ok && test.passes(significance), test.p_value};
}

}  // namespace

DiscreteTarget random_small_target(RngStream& rng, Regime regime, std::size_t max_support) {
  const std::size_t lo = 2;
  const std::size_t hi = std::max<std::size_t>(lo, max_support);
  for (;;) {
    const std::size_t n = lo + rng.uniform_index(hi - lo + 1);
    std::vector<double> p(n);
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = digit(rng);
      q[i] = regime == Regime::kEnclosing
                 ? p[i] + static_cast<double>(rng.uniform_index(10 - static_cast<std::size_t>(p[i])))
                 : digit(rng);
    }
    if (compensated_sum(p) == 0.0) continue;
    DiscreteTarget target(std::move(p), std::move(q));
    if (regime_holds(target, regime)) return target;
  }
}

std::string_view to_string(SamplerKind kind) noexcept {
  switch (kind) {
    case SamplerKind::kAlgorithmOne: return "algorithm_one";
    case SamplerKind::kAlgorithmTwo: return "algorithm_two";
    case SamplerKind::kAcceptanceRejection: return "acceptance_rejection";
    case SamplerKind::kDynamicMarsaglia: return "sample_index[marsaglia]";
    case SamplerKind::kDynamicAlias: return "sample_index[alias]";
    case SamplerKind::kMarsagliaTable: return "marsaglia_table";
    case SamplerKind::kAliasTable: return "alias_table";
  }
  return "unknown";
}

std::vector<SamplerKind> all_sampler_kinds() {
  return {SamplerKind::kAlgorithmOne,     SamplerKind::kAlgorithmTwo,
          SamplerKind::kAcceptanceRejection, SamplerKind::kDynamicMarsaglia,
          SamplerKind::kDynamicAlias,     SamplerKind::kMarsagliaTable,
          SamplerKind::kAliasTable};
}

SuiteResult oracle_suite(std::size_t instances, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult result;
  result.name = "path_probability_oracle";
  result.total = instances;
  result.required = instances;
  RngStream rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < instances; ++k) {
    const Regime regime = k % 2 == 0 ? Regime::kPAtLeastQ : Regime::kPBelowQ;
    const auto target = random_small_target(rng, regime);
    bool ok = true;
    for (std::size_t z = 0; z < target.size(); ++z) {
      const double err =
          std::abs(path_probability_oracle(target, z) - target.p_at(z) / target.total_p());
      worst = std::max(worst, err);
      if (!(err <= 1e-12)) ok = false;
    }
    if (ok) ++result.passed;
  }
  std::ostringstream detail;
  detail << "max |oracle - p/I[p]| = " << worst;
  result.detail = detail.str();
  result.seconds = seconds_since(start);
  return result;
}

SuiteResult gof_suite(SamplerKind kind, const GofConfig& config) {
  const auto start = Clock::now();
  SuiteResult result;
  result.name = std::string("chi_square:") + std::string(to_string(kind));
  result.total = config.targets;
  result.required = static_cast<std::size_t>(
      std::ceil(config.required_fraction * static_cast<double>(config.targets)));

  std::vector<TargetOutcome> outcomes(config.targets);
  const std::uint64_t suite_seed =
      derive_seed(config.seed, static_cast<std::uint64_t>(kind) + 1);
  parallel_for(config.targets, config.parallelism, [&](std::size_t k) {
    outcomes[k] = run_instance(kind, derive_seed(suite_seed, k), config.samples,
                               config.significance);
  });
  double min_p = 1.0;
  for (const auto& o : outcomes) {
    if (o.passed) ++result.passed;
    min_p = std::min(min_p, o.p_value);
  }
  std::ostringstream detail;
  detail << "min p-value " << min_p;
  result.detail = detail.str();
  result.seconds = seconds_since(start);
  return result;
}

}  // namespace rrs::validation
