#include "rrs/singular_mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rrs/error.hpp"

namespace rrs::singular {

double density(double x) { return 1.0 / std::sqrt(x) + std::pow(1.0 - x, -0.2); }

double proposal_density(double x) { return 1.0 / std::sqrt(x); }

double cdf(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return (2.0 * std::sqrt(x) + 1.25 * (1.0 - std::pow(1.0 - x, 0.8))) / kTotalP;
}

double mean() { return 49.0 / 117.0; }

double inv_sqrt_from_uniform(double u) { return u * u; }

double excess_quintic_from_uniform(double u) { return 1.0 - std::pow(1.0 - u, 1.25); }

double sample_inv_sqrt(RngStream& rng) {
  for (;;) {
    const double x = inv_sqrt_from_uniform(rng.uniform_open());
    if (x > 0.0 && x < 1.0) return x;
  }
}

double sample_excess_quintic(RngStream& rng) {
  for (;;) {
    const double x = excess_quintic_from_uniform(rng.uniform_open());
    if (x > 0.0 && x < 1.0) return x;
  }
}

const ContinuousTarget& target() {
  static const ContinuousTarget kTarget{
      .eval_p = density,
      .eval_q = proposal_density,
      .mass_p = kTotalP,
      .mass_q = kTotalQ,
      .mass_excess = kExcessTotal,
      .draw_q = sample_inv_sqrt,
      .draw_excess = sample_excess_quintic,
  };
  return kTarget;
}

SampleRecord<double> sample_mixture(RngStream& rng) { return algorithm_one(target(), rng); }

MixtureSampler::MixtureSampler(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.size() < 2) {
    throw Error(ErrorCode::kInvalidParams, "a mixture needs at least two components");
  }
  double tail = 0.0;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (!(components_[k].mass > 0.0) || !components_[k].sample) {
      throw Error(ErrorCode::kInvalidParams, "component masses must be positive");
    }
    if (k > 0) {
      tail += components_[k].mass;
      tail_cumulative_.push_back(tail);
    }
  }
  const double head = components_.front().mass;
  // p > q everywhere the components live, so membership in L is constant.
  target_ = ContinuousTarget{
      .eval_p = [](double) { return 1.0; },
      .eval_q = [](double) { return 0.0; },
      .mass_p = head + tail,
      .mass_q = head,
      .mass_excess = tail,
      .draw_q = [this](RngStream& rng) { return components_.front().sample(rng); },
      .draw_excess = [this](RngStream& rng) { return sample_tail(rng); },
  };
}

double MixtureSampler::sample_tail(RngStream& rng) const {
  const double u = rng.uniform() * tail_cumulative_.back();
  const auto it = std::upper_bound(tail_cumulative_.begin(), tail_cumulative_.end(), u);
  const std::size_t k = std::min<std::size_t>(
      static_cast<std::size_t>(it - tail_cumulative_.begin()), tail_cumulative_.size() - 1);
  return components_[k + 1].sample(rng);
}

}  // namespace rrs::singular
