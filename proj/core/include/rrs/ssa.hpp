#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rrs/compensated_sum.hpp"
#include "rrs/dynamic_weights.hpp"
#include "rrs/rng.hpp"

namespace rrs::ssa {

enum class ReactionKind { kZeroth, kUnimolecular, kBimolecular, kBimolecularSame };

struct SpeciesChange {
  std::size_t species = 0;
  std::int64_t delta = 0;
};

/// Elementary reaction with mass-action propensity. `first`/`second` name the
/// reactant species where the kind needs them.
struct Reaction {
  double rate = 0.0;
  ReactionKind kind = ReactionKind::kZeroth;
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<SpeciesChange> change;  // sparse state-change vector, no zeros
};

class ReactionNetwork {
 public:
  /// Throws kInvalidNetwork on duplicate names or negative counts.
  std::size_t add_species(std::string name, std::int64_t initial_count);

  /// Reactant multiset decides the kind: {} zeroth, {i} unimolecular,
  /// {i, k} bimolecular, {i, i} bimolecular on one species. Throws
  /// kInvalidNetwork for more than two reactants, unknown species or a
  /// negative / non-finite rate.
  std::size_t add_reaction(double rate, std::vector<std::size_t> reactants,
                           std::vector<std::size_t> products);

  std::size_t species_count() const noexcept { return names_.size(); }
  std::size_t reaction_count() const noexcept { return reactions_.size(); }
  std::span<const std::string> species_names() const noexcept { return names_; }
  std::span<const std::int64_t> initial_counts() const noexcept { return initial_; }
  std::span<const Reaction> reactions() const noexcept { return reactions_; }
  std::optional<std::size_t> find_species(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> initial_;
  std::vector<Reaction> reactions_;
};

/// Mass-action propensity: c, c*X_i, c*X_i*X_k, or c*X_i*(X_i-1)/2.
double propensity(const Reaction& reaction, std::span<const std::int64_t> counts);

/// For each reaction j, the reactions whose propensity can change when j
/// fires (those with a reactant in j's state-change vector).
std::vector<std::vector<std::size_t>> dependency_graph(const ReactionNetwork& network);

/// Direct-method selection: the smallest k with a_0 + ... + a_k > r * a_total.
/// Falls back to the last positive propensity if rounding leaves the
/// threshold unreached.
std::size_t select_partial_sum(std::span<const double> propensities, double a_total,
                               double r);

enum class Backend { kDirect, kAcceptanceRejection, kReducedRejection };

std::string_view to_string(Backend b) noexcept;
std::optional<Backend> parse_backend(std::string_view name) noexcept;

struct Options {
  std::size_t reinit_threshold = 0;  // reduced-rejection backend; 0: ceil(4 sqrt(M))
  SamplerOptions sampler{};
};

struct StepInfo {
  std::size_t reaction = 0;
  double dt = 0.0;
  std::uint64_t proposals = 0;
};

struct TrajectoryPoint {
  double t = 0.0;
  std::vector<std::int64_t> counts;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  std::uint64_t steps = 0;
  bool exhausted = false;  // all propensities reached zero before t_end
};

/// Exact stochastic simulation (Gillespie) with a pluggable reaction
/// selection step. Propensities are recomputed from counts for the
/// reactions that depend on the fired one, never drifted incrementally.
class Simulator {
 public:
  Simulator(ReactionNetwork network, Backend backend, std::uint64_t seed,
            Options options = {});

  const ReactionNetwork& network() const noexcept { return network_; }
  Backend backend() const noexcept { return backend_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::span<const double> propensities() const noexcept { return a_; }
  double total_propensity() const noexcept { return a_total_.value(); }
  double time() const noexcept { return t_; }
  bool exhausted() const noexcept { return positive_ == 0; }
  std::uint64_t steps() const noexcept { return steps_; }
  std::uint64_t proposals() const noexcept { return proposals_; }
  std::uint64_t selections() const noexcept { return selections_; }
  double max_bound() const noexcept { return max_bound_; }
  const DynamicWeights* weights() const noexcept { return weights_ ? &*weights_ : nullptr; }

  /// One reaction index drawn with probability a_k / a_total by the
  /// configured backend; the state is not changed. Throws kExhaustedSystem.
  std::size_t select_reaction();

  /// Exponential waiting time with mean 1/a_total, selection, firing.
  /// Throws kExhaustedSystem or kNegativeCount.
  StepInfo step();

  /// Steps until t reaches t_end (the crossing reaction does not fire) or
  /// the system is exhausted. Records the state at t0 + m*sample_dt (m >= 0)
  /// and at t_end; with sample_dt == 0 records t0, every event, and t_end.
  /// t_end == t gives an empty trajectory. Throws kExhaustedSystem if no
  /// reaction can fire at the start; exhaustion reached later ends the run
  /// with `exhausted` set.
  Trajectory run_until(double t_end, double sample_dt = 0.0);

  /// Largest |a_j - propensity(j, X)| over all reactions; zero when the
  /// dependency-driven updates are complete.
  double propensity_error() const;

 private:
  void fire(std::size_t k);
  void set_propensity(std::size_t j, double value);
  void recompute_bound();
  void ensure_weights();

  ReactionNetwork network_;
  Backend backend_;
  Options options_;
  RngStream rng_;
  std::vector<std::vector<std::size_t>> dependents_;
  std::vector<std::int64_t> counts_;
  std::vector<double> a_;
  CompensatedSum a_total_;
  std::size_t positive_ = 0;
  double max_bound_ = 0.0;
  std::uint64_t since_refresh_ = 0;
  std::optional<DynamicWeights> weights_;
  double t_ = 0.0;
  std::uint64_t steps_ = 0;
  std::uint64_t proposals_ = 0;
  std::uint64_t selections_ = 0;
};

}  // namespace rrs::ssa
