#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rrs/compensated_sum.hpp"
#include "rrs/dynamic_weights.hpp"
#include "rrs/rng.hpp"

namespace rrs::kmc {

enum class Backend { kReducedRejection, kAcceptanceRejection };

/// How a drawn pair with k == l is handled.
enum class SelfPairPolicy {
  kRedrawPair,    // redraw both indices: pairs k != l with probability ∝ s_k s_l
  kRedrawSecond,  // redraw only l until l != k
  kAllow,         // literal independent draws; k == l refreshes one particle
};

/// Maintenance of the constant proposal height used by the AR backend.
enum class ArBoundPolicy {
  kPeriodicRecompute,  // raised on updates, recomputed exactly every N interactions
  kMonotone,           // raised on updates, never lowered
};

enum class Observable { kSum, kSumOfSquares };

std::string_view to_string(Backend b) noexcept;
std::optional<Backend> parse_backend(std::string_view name) noexcept;

struct Config {
  std::size_t n_particles = 100;
  double alpha = 0.5;
  Backend backend = Backend::kReducedRejection;
  std::size_t reinit_threshold = 0;  // 0: ceil(4 sqrt(N))
  TableBackend table = TableBackend::kMarsaglia;
  SelfPairPolicy self_pairs = SelfPairPolicy::kRedrawPair;
  ArBoundPolicy ar_bound = ArBoundPolicy::kPeriodicRecompute;
  std::uint64_t seed = 1;
  /// Observable sums are recomputed from scratch this often.
  std::uint64_t observable_refresh = 100'000;

  /// Throws Error(kInvalidParams) unless N >= 2 and alpha in (0, 1).
  void validate() const;
};

/// Closed-form stationary expectation of the sum (alpha+1)/(alpha+2)(N-2)+1
/// or of the sum of squares (alpha+1)/(alpha+3)(N-2)+2/3.
///
/// The stationary density of a configuration is
///   pi(x) = (x_1...x_N)^alpha * sum_{i<j} (x_i x_j)^-alpha / Z,
/// Z = C(N,2) / (alpha+1)^(N-2), with pairs ranging over distinct particles.
/// Throws kInvalidParams for N < 2 or alpha outside (0, 1).
double expected_g(std::size_t n_particles, double alpha, Observable kind);

/// Z above; documents the normalization the closed forms rely on.
double stationary_normalizer(std::size_t n_particles, double alpha);

/// States x_i in (0, 1), rates s_i = x_i^-alpha and running sums.
class ParticleSystem {
 public:
  ParticleSystem(std::vector<double> states, double alpha);

  std::size_t size() const noexcept { return x_.size(); }
  double alpha() const noexcept { return alpha_; }
  double state(std::size_t i) const noexcept { return x_[i]; }
  double rate(std::size_t i) const noexcept { return s_[i]; }
  std::span<const double> states() const noexcept { return x_; }
  std::span<const double> rates() const noexcept { return s_; }
  double total_rate() const noexcept { return sum_s_.value(); }
  double sum_x() const noexcept { return sum_x_.value(); }
  double sum_x2() const noexcept { return sum_x2_.value(); }

  /// Replaces x_i and returns the new rate.
  double set_state(std::size_t i, double x);
  /// Recomputes every running sum from the states.
  void refresh_sums();

 private:
  std::vector<double> x_;
  std::vector<double> s_;
  double alpha_;
  CompensatedSum sum_s_;
  CompensatedSum sum_x_;
  CompensatedSum sum_x2_;
};

struct InteractionEvent {
  std::size_t k = 0;
  std::size_t l = 0;
  double dt = 0.0;
  std::uint64_t proposals = 0;
};

struct SeriesPoint {
  std::uint64_t interaction = 0;
  double value = 0.0;
  double running_mean = 0.0;
};

/// Average of g over interactions 1..count, plus a decimated series.
struct RunningEstimate {
  std::uint64_t count = 0;
  double mean = 0.0;
  std::vector<SeriesPoint> series;
};

struct Progress {
  std::uint64_t interactions = 0;
  double sum = 0.0;
  double sum_of_squares = 0.0;
  double mean_sum = 0.0;
  double mean_sum_of_squares = 0.0;
  std::uint64_t proposals = 0;
  std::uint64_t reinit_count = 0;
  double time = 0.0;
};

struct RunResult {
  RunningEstimate sum;
  RunningEstimate sum_of_squares;
  std::uint64_t proposals = 0;
  std::uint64_t selections = 0;
  std::uint64_t reinit_count = 0;
  double time = 0.0;
};

/// Kinetic Monte Carlo for N particles with pair rates (x_k x_l)^-alpha:
/// exponential waiting time with mean 1/s^2, two rate-weighted index draws,
/// both partners refreshed uniformly on (0, 1).
class Simulation {
 public:
  /// Initial states i.i.d. uniform on (0, 1) from the configured seed.
  explicit Simulation(const Config& config);
  Simulation(const Config& config, std::vector<double> initial_states);

  InteractionEvent step();

  /// One rate-weighted index draw; adds the proposals it consumed.
  std::size_t select_index(std::uint64_t& proposals);
  /// Two draws combined according to the self-pair policy.
  std::pair<std::size_t, std::size_t> select_pair(std::uint64_t& proposals);
  /// Refreshes x_k and x_l uniformly on (0, 1).
  void update_states(std::size_t k, std::size_t l);

  /// Runs n interactions, tracking both observables. Every `record_every`
  /// interactions (0: never) a series point is stored and `on_record` called.
  RunResult run(std::uint64_t n_interactions, std::uint64_t record_every = 0,
                const std::function<void(const Progress&)>& on_record = {});

  RunningEstimate run(std::uint64_t n_interactions, Observable kind,
                      std::uint64_t record_every);

  const Config& config() const noexcept { return config_; }
  const ParticleSystem& system() const noexcept { return system_; }
  const DynamicWeights* weights() const noexcept {
    return weights_ ? &*weights_ : nullptr;
  }
  double time() const noexcept { return time_; }
  std::uint64_t interactions() const noexcept { return interactions_; }
  std::uint64_t proposals() const noexcept { return proposals_; }
  std::uint64_t selections() const noexcept { return selections_; }
  std::uint64_t reinit_count() const noexcept {
    return weights_ ? weights_->reinit_count() : 0;
  }
  double ar_bound() const noexcept { return ar_bound_; }

 private:
  void init_selection();
  void recompute_ar_bound();
  void check_consistent(std::size_t i) const;

  Config config_;
  RngStream rng_;
  ParticleSystem system_;
  std::optional<DynamicWeights> weights_;
  double ar_bound_ = 0.0;
  std::uint64_t since_bound_recompute_ = 0;
  double time_ = 0.0;
  std::uint64_t interactions_ = 0;
  std::uint64_t proposals_ = 0;
  std::uint64_t selections_ = 0;
};

}  // namespace rrs::kmc
