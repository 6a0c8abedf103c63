#include "rrs/kmc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rrs/error.hpp"

namespace rrs::kmc {
namespace {

std::vector<double> uniform_states(std::size_t n, RngStream& rng) {
  std::vector<double> x(n);
  for (double& xi : x) xi = rng.uniform_open();
  return x;
}

void require_params(std::size_t n_particles, double alpha) {
  if (n_particles < 2) {
    throw Error(ErrorCode::kInvalidParams,
                "need at least 2 particles, got " + std::to_string(n_particles));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "alpha must be in (0, 1), got " + std::to_string(alpha));
  }
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  return b == Backend::kReducedRejection ? "rr" : "ar";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
  if (name == "rr") return Backend::kReducedRejection;
  if (name == "ar") return Backend::kAcceptanceRejection;
  return std::nullopt;
}

void Config::validate() const {
  require_params(n_particles, alpha);
  if (observable_refresh == 0) {
    throw Error(ErrorCode::kInvalidParams, "observable refresh interval must be positive");
  }
}

double expected_g(std::size_t n_particles, double alpha, Observable kind) {
  require_params(n_particles, alpha);
  const double others = static_cast<double>(n_particles) - 2.0;
  if (kind == Observable::kSum) return (alpha + 1.0) / (alpha + 2.0) * others + 1.0;
  return (alpha + 1.0) / (alpha + 3.0) * others + 2.0 / 3.0;
}

double stationary_normalizer(std::size_t n_particles, double alpha) {
  require_params(n_particles, alpha);
  const double n = static_cast<double>(n_particles);
  return n * (n - 1.0) / 2.0 / std::pow(alpha + 1.0, n - 2.0);
}

ParticleSystem::ParticleSystem(std::vector<double> states, double alpha)
    : x_(std::move(states)), s_(x_.size()), alpha_(alpha) {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!(x_[i] > 0.0 && x_[i] < 1.0)) {
      throw Error(ErrorCode::kInvalidParams,
                  "state " + std::to_string(i) + " outside (0, 1)");
    }
    s_[i] = std::pow(x_[i], -alpha_);
  }
  refresh_sums();
}

double ParticleSystem::set_state(std::size_t i, double x) {
  const double old_x = x_[i];
  const double old_s = s_[i];
  x_[i] = x;
  s_[i] = std::pow(x, -alpha_);
  sum_s_.add(s_[i]);
  sum_s_.add(-old_s);
  sum_x_.add(x);
  sum_x_.add(-old_x);
  sum_x2_.add(x * x);
  sum_x2_.add(-(old_x * old_x));
  return s_[i];
}

void ParticleSystem::refresh_sums() {
  sum_s_.reset();
  sum_x_.reset();
  sum_x2_.reset();
  for (std::size_t i = 0; i < x_.size(); ++i) {
    sum_s_.add(s_[i]);
    sum_x_.add(x_[i]);
    sum_x2_.add(x_[i] * x_[i]);
  }
}

Simulation::Simulation(const Config& config)
    : config_(config), rng_(config.seed), system_([&] {
        config.validate();
        return uniform_states(config.n_particles, rng_);
      }(), config.alpha) {
  init_selection();
}

Simulation::Simulation(const Config& config, std::vector<double> initial_states)
    : config_(config), rng_(config.seed), system_([&] {
        config.validate();
        if (initial_states.size() != config.n_particles) {
          throw Error(ErrorCode::kInvalidParams, "initial state count differs from N");
        }
        return std::move(initial_states);
      }(), config.alpha) {
  init_selection();
}

void Simulation::init_selection() {
  if (config_.backend == Backend::kReducedRejection) {
    DynamicWeightsOptions options;
    options.reinit_threshold = config_.reinit_threshold;
    options.table = config_.table;
    weights_.emplace(system_.rates(), options);
  }
  recompute_ar_bound();
}

void Simulation::recompute_ar_bound() {
  const auto rates = system_.rates();
  ar_bound_ = *std::max_element(rates.begin(), rates.end());
  since_bound_recompute_ = 0;
}

void Simulation::check_consistent(std::size_t i) const {
  const double s = system_.rate(i);
  if (std::abs(weights_->p_at(i) - s) > 1e-12 * s) {
    throw Error(ErrorCode::kInconsistentWeights,
                "weight of particle " + std::to_string(i) + " diverged from its rate");
  }
}

std::size_t Simulation::select_index(std::uint64_t& proposals) {
  ++selections_;
  if (weights_) {
    const auto record = weights_->sample(rng_);
    proposals += record.total_proposals();
    check_consistent(record.value);
    return record.value;
  }
  const std::size_t n = system_.size();
  for (std::uint64_t attempt = 0; attempt < config_.n_particles * 1'000'000ULL; ++attempt) {
    const std::size_t i = rng_.uniform_index(n);
    ++proposals;
    if (rng_.uniform() * ar_bound_ < system_.rate(i)) return i;
  }
  throw Error(ErrorCode::kNonTermination, "acceptance-rejection selection did not accept");
}

std::pair<std::size_t, std::size_t> Simulation::select_pair(std::uint64_t& proposals) {
  switch (config_.self_pairs) {
    case SelfPairPolicy::kRedrawPair:
      for (;;) {
        const std::size_t k = select_index(proposals);
        const std::size_t l = select_index(proposals);
        if (k != l) return {k, l};
      }
    case SelfPairPolicy::kRedrawSecond: {
      const std::size_t k = select_index(proposals);
      for (;;) {
        const std::size_t l = select_index(proposals);
        if (l != k) return {k, l};
      }
    }
    case SelfPairPolicy::kAllow:
      break;
  }
  const std::size_t k = select_index(proposals);
  return {k, select_index(proposals)};
}

void Simulation::update_states(std::size_t k, std::size_t l) {
  for (const std::size_t i : {k, l}) {
    const double s = system_.set_state(i, rng_.uniform_open());
    if (weights_) weights_->update_weight(i, s);
    ar_bound_ = std::max(ar_bound_, s);
    if (k == l) break;
  }
}

InteractionEvent Simulation::step() {
  InteractionEvent event;
  const double s = system_.total_rate();
  event.dt = rng_.exponential(1.0 / (s * s));
  const auto [k, l] = select_pair(event.proposals);
  event.k = k;
  event.l = l;
  update_states(k, l);
  proposals_ += event.proposals;
  time_ += event.dt;
  ++interactions_;
  if (interactions_ % config_.observable_refresh == 0) system_.refresh_sums();
  if (config_.ar_bound == ArBoundPolicy::kPeriodicRecompute &&
      ++since_bound_recompute_ >= system_.size()) {
    recompute_ar_bound();
  }
  return event;
}

RunResult Simulation::run(std::uint64_t n_interactions, std::uint64_t record_every,
                          const std::function<void(const Progress&)>& on_record) {
  RunResult result;
  CompensatedSum acc_sum;
  CompensatedSum acc_sq;
  const std::uint64_t proposals_before = proposals_;
  const std::uint64_t selections_before = selections_;
  for (std::uint64_t i = 1; i <= n_interactions; ++i) {
    step();
    const double g1 = system_.sum_x();
    const double g2 = system_.sum_x2();
    acc_sum.add(g1);
    acc_sq.add(g2);
    if (record_every != 0 && i % record_every == 0) {
      const double count = static_cast<double>(i);
      Progress progress{i,
                        g1,
                        g2,
                        acc_sum.value() / count,
                        acc_sq.value() / count,
                        proposals_ - proposals_before,
                        reinit_count(),
                        time_};
      result.sum.series.push_back({i, g1, progress.mean_sum});
      result.sum_of_squares.series.push_back({i, g2, progress.mean_sum_of_squares});
      if (on_record) on_record(progress);
    }
  }
  const double count = static_cast<double>(n_interactions);
  result.sum.count = result.sum_of_squares.count = n_interactions;
  if (n_interactions > 0) {
    result.sum.mean = acc_sum.value() / count;
    result.sum_of_squares.mean = acc_sq.value() / count;
  }
  result.proposals = proposals_ - proposals_before;
  result.selections = selections_ - selections_before;
  result.reinit_count = reinit_count();
  result.time = time_;
  return result;
}

RunningEstimate Simulation::run(std::uint64_t n_interactions, Observable kind,
                                std::uint64_t record_every) {
  RunResult result = run(n_interactions, record_every);
  return kind == Observable::kSum ? std::move(result.sum)
                                  : std::move(result.sum_of_squares);
}

}  // namespace rrs::kmc
