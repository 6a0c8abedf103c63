#include "rrs/ssa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "rrs/error.hpp"

namespace rrs::ssa {

std::size_t ReactionNetwork::add_species(std::string name, std::int64_t initial_count) {
  if (name.empty()) throw Error(ErrorCode::kInvalidNetwork, "empty species name");
  if (find_species(name)) {
    throw Error(ErrorCode::kInvalidNetwork, "duplicate species '" + name + "'");
  }
  if (initial_count < 0) {
    throw Error(ErrorCode::kInvalidNetwork, "negative initial count for '" + name + "'");
  }
  names_.push_back(std::move(name));
  initial_.push_back(initial_count);
  return names_.size() - 1;
}

std::optional<std::size_t> ReactionNetwork::find_species(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t ReactionNetwork::add_reaction(double rate, std::vector<std::size_t> reactants,
                                          std::vector<std::size_t> products) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorCode::kInvalidNetwork, "rate constants must be finite and >= 0");
  }
  if (reactants.size() > 2) {
    throw Error(ErrorCode::kInvalidNetwork, "only elementary reactions (<= 2 reactants)");
  }
  for (std::size_t s : reactants) {
    if (s >= names_.size()) throw Error(ErrorCode::kInvalidNetwork, "unknown reactant");
  }
  for (std::size_t s : products) {
    if (s >= names_.size()) throw Error(ErrorCode::kInvalidNetwork, "unknown product");
  }

  Reaction r;
  r.rate = rate;
  if (reactants.empty()) {
    r.kind = ReactionKind::kZeroth;
  } else if (reactants.size() == 1) {
    r.kind = ReactionKind::kUnimolecular;
    r.first = reactants[0];
  } else if (reactants[0] == reactants[1]) {
    r.kind = ReactionKind::kBimolecularSame;
    r.first = r.second = reactants[0];
  } else {
    r.kind = ReactionKind::kBimolecular;
    r.first = std::min(reactants[0], reactants[1]);
    r.second = std::max(reactants[0], reactants[1]);
  }

  std::map<std::size_t, std::int64_t> net;
  for (std::size_t s : reactants) --net[s];
  for (std::size_t s : products) ++net[s];
  for (const auto& [species, delta] : net) {
    if (delta != 0) r.change.push_back({species, delta});
  }
  reactions_.push_back(std::move(r));
  return reactions_.size() - 1;
}

double propensity(const Reaction& reaction, std::span<const std::int64_t> counts) {
  switch (reaction.kind) {
    case ReactionKind::kZeroth:
      return reaction.rate;
    case ReactionKind::kUnimolecular:
      return reaction.rate * static_cast<double>(counts[reaction.first]);
    case ReactionKind::kBimolecular:
      return reaction.rate * static_cast<double>(counts[reaction.first]) *
             static_cast<double>(counts[reaction.second]);
    case ReactionKind::kBimolecularSame: {
      const auto x = static_cast<double>(counts[reaction.first]);
      return reaction.rate * x * (x - 1.0) / 2.0;
    }
  }
  return 0.0;
}

std::vector<std::vector<std::size_t>> dependency_graph(const ReactionNetwork& network) {
  const auto reactions = network.reactions();
  std::vector<std::vector<std::size_t>> readers(network.species_count());
  for (std::size_t j = 0; j < reactions.size(); ++j) {
    const Reaction& r = reactions[j];
    if (r.kind == ReactionKind::kZeroth) continue;
    readers[r.first].push_back(j);
    if (r.kind == ReactionKind::kBimolecular) readers[r.second].push_back(j);
  }
  std::vector<std::vector<std::size_t>> graph(reactions.size());
  for (std::size_t j = 0; j < reactions.size(); ++j) {
    for (const SpeciesChange& c : reactions[j].change) {
      graph[j].insert(graph[j].end(), readers[c.species].begin(), readers[c.species].end());
    }
    std::sort(graph[j].begin(), graph[j].end());
    graph[j].erase(std::unique(graph[j].begin(), graph[j].end()), graph[j].end());
  }
  return graph;
}

std::size_t select_partial_sum(std::span<const double> propensities, double a_total,
                               double r) {
  const double threshold = r * a_total;
  double partial = 0.0;
  std::size_t last_positive = propensities.size();
  for (std::size_t k = 0; k < propensities.size(); ++k) {
    if (propensities[k] <= 0.0) continue;
    partial += propensities[k];
    last_positive = k;
    if (partial > threshold) return k;
  }
  if (last_positive == propensities.size()) {
    throw Error(ErrorCode::kExhaustedSystem, "all propensities are zero");
  }
  return last_positive;
}

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::kDirect: return "direct";
    case Backend::kAcceptanceRejection: return "ar";
    case Backend::kReducedRejection: return "rr";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
  if (name == "direct") return Backend::kDirect;
  if (name == "ar") return Backend::kAcceptanceRejection;
  if (name == "rr") return Backend::kReducedRejection;
  return std::nullopt;
}

Simulator::Simulator(ReactionNetwork network, Backend backend, std::uint64_t seed,
                     Options options)
    : network_(std::move(network)),
      backend_(backend),
      options_(options),
      rng_(seed),
      dependents_(dependency_graph(network_)),
      counts_(network_.initial_counts().begin(), network_.initial_counts().end()),
      a_(network_.reaction_count(), 0.0) {
  const auto reactions = network_.reactions();
  for (std::size_t j = 0; j < reactions.size(); ++j) {
    a_[j] = propensity(reactions[j], counts_);
    a_total_.add(a_[j]);
    if (a_[j] > 0.0) ++positive_;
  }
  recompute_bound();
}

void Simulator::recompute_bound() {
  max_bound_ = a_.empty() ? 0.0 : *std::max_element(a_.begin(), a_.end());
  since_refresh_ = 0;
}

void Simulator::ensure_weights() {
  if (weights_) return;
  DynamicWeightsOptions options;
  options.reinit_threshold = options_.reinit_threshold;
  options.sampler = options_.sampler;
  weights_.emplace(a_, options);
}

std::size_t Simulator::select_reaction() {
  if (exhausted()) throw Error(ErrorCode::kExhaustedSystem, "all propensities are zero");
  ++selections_;
  switch (backend_) {
    case Backend::kDirect:
      ++proposals_;
      return select_partial_sum(a_, a_total_.value(), rng_.uniform());
    case Backend::kAcceptanceRejection: {
      const std::size_t m = a_.size();
      for (std::uint64_t attempt = 0; attempt < options_.sampler.max_cycles; ++attempt) {
        const std::size_t k = rng_.uniform_index(m);
        ++proposals_;
        if (rng_.uniform() * max_bound_ < a_[k]) return k;
      }
      throw Error(ErrorCode::kNonTermination, "reaction selection did not accept");
    }
    case Backend::kReducedRejection: {
      ensure_weights();
      const auto record = weights_->sample(rng_);
      proposals_ += record.total_proposals();
      return record.value;
    }
  }
  return 0;
}

void Simulator::set_propensity(std::size_t j, double value) {
  const double old = a_[j];
  if (value == old) return;
  a_[j] = value;
  if (old > 0.0) --positive_;
  if (value > 0.0) ++positive_;
  a_total_.add(value);
  a_total_.add(-old);
  if (value > max_bound_) max_bound_ = value;
  if (weights_) weights_->update_weight(j, value);
}

void Simulator::fire(std::size_t k) {
  const Reaction& r = network_.reactions()[k];
  for (const SpeciesChange& c : r.change) {
    if (counts_[c.species] + c.delta < 0) {
      throw Error(ErrorCode::kNegativeCount,
                  "reaction " + std::to_string(k) + " would drive '" +
                      network_.species_names()[c.species] + "' negative");
    }
  }
  for (const SpeciesChange& c : r.change) counts_[c.species] += c.delta;
  const auto reactions = network_.reactions();
  for (std::size_t j : dependents_[k]) set_propensity(j, propensity(reactions[j], counts_));

  if (positive_ == 0) a_total_.reset();
  if (++since_refresh_ >= a_.size()) {
    a_total_.reset();
    for (double a : a_) a_total_.add(a);
    recompute_bound();
  }
}

StepInfo Simulator::step() {
  if (exhausted()) throw Error(ErrorCode::kExhaustedSystem, "all propensities are zero");
  StepInfo info;
  info.dt = rng_.exponential(1.0 / a_total_.value());
  const std::uint64_t before = proposals_;
  info.reaction = select_reaction();
  info.proposals = proposals_ - before;
  fire(info.reaction);
  t_ += info.dt;
  ++steps_;
  return info;
}

Trajectory Simulator::run_until(double t_end, double sample_dt) {
  if (!(t_end >= t_) || !std::isfinite(t_end)) {
    throw Error(ErrorCode::kInvalidParams, "end time must not precede the current time");
  }
  if (!(sample_dt >= 0.0)) throw Error(ErrorCode::kInvalidParams, "negative sample interval");
  Trajectory traj;
  if (t_end == t_) return traj;
  if (exhausted()) throw Error(ErrorCode::kExhaustedSystem, "all propensities are zero");

  const double t0 = t_;
  traj.points.push_back({t0, counts_});
  std::uint64_t next_grid = 1;
  auto record_grid_until = [&](double limit) {
    if (sample_dt <= 0.0) return;
    for (;;) {
      const double tg = t0 + static_cast<double>(next_grid) * sample_dt;
      if (tg > limit || tg >= t_end) break;
      traj.points.push_back({tg, counts_});
      ++next_grid;
    }
  };

  for (;;) {
    if (exhausted()) {
      traj.exhausted = true;
      break;
    }
    const double dt = rng_.exponential(1.0 / a_total_.value());
    if (t_ + dt >= t_end) break;
    record_grid_until(t_ + dt);
    fire(select_reaction());
    t_ += dt;
    ++steps_;
    ++traj.steps;
    if (sample_dt <= 0.0) traj.points.push_back({t_, counts_});
  }
  record_grid_until(t_end);
  t_ = t_end;
  traj.points.push_back({t_end, counts_});
  return traj;
}

double Simulator::propensity_error() const {
  double worst = 0.0;
  const auto reactions = network_.reactions();
  for (std::size_t j = 0; j < reactions.size(); ++j) {
    worst = std::max(worst, std::abs(a_[j] - propensity(reactions[j], counts_)));
  }
  return worst;
}

}  // namespace rrs::ssa
