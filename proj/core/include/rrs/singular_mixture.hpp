#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rrs/reduced_rejection.hpp"
#include "rrs/rng.hpp"
#include "rrs/sample_record.hpp"
#include "rrs/target.hpp"

namespace rrs::singular {

// Density p(x) = x^(-1/2) + (1-x)^(-1/5) on (0, 1), singular at both ends.
// With q(x) = x^(-1/2) the excess region is all of (0, 1) and p - q is the
// second term, so every q-draw is accepted.
inline constexpr double kTotalQ = 2.0;          // integral of x^(-1/2)
inline constexpr double kExcessTotal = 1.25;    // integral of (1-x)^(-1/5)
inline constexpr double kTotalP = kTotalQ + kExcessTotal;

double density(double x);
double proposal_density(double x);

/// Normalized CDF of p: (2 sqrt(x) + 5/4 (1 - (1-x)^(4/5))) / (13/4).
double cdf(double x);

/// Mean of p / I[p], 49/117.
double mean();

/// Inverse-transform maps from a uniform u in (0, 1).
double inv_sqrt_from_uniform(double u);        // x = u^2, CDF sqrt(x)
double excess_quintic_from_uniform(double u);  // x = 1 - (1-u)^(5/4)

/// Draw from density x^(-1/2) / 2; result strictly inside (0, 1).
double sample_inv_sqrt(RngStream& rng);
/// Draw from density (1-x)^(-1/5) / (5/4); result strictly inside (0, 1).
double sample_excess_quintic(RngStream& rng);

/// The (p, q) pair above as a continuous target.
const ContinuousTarget& target();

/// One draw from p via reduced rejection (always algorithm_one).
SampleRecord<double> sample_mixture(RngStream& rng);

/// Sampler for p = p_1 + ... + p_n given exact component samplers and their
/// masses. The first component plays q and the rest form the excess p - q,
/// which is positive everywhere, so no proposal is ever rejected. Component
/// exactness is the caller's responsibility.
class MixtureSampler {
 public:
  struct Component {
    double mass = 0.0;
    std::function<double(RngStream&)> sample;
  };

  /// Throws kInvalidParams if fewer than two components are given or any
  /// mass is not positive.
  explicit MixtureSampler(std::vector<Component> components);
  // The target's samplers refer back to this object.
  MixtureSampler(const MixtureSampler&) = delete;
  MixtureSampler& operator=(const MixtureSampler&) = delete;

  double total_mass() const noexcept { return target_.total_p(); }
  SampleRecord<double> sample(RngStream& rng) const { return algorithm_one(target_, rng); }

 private:
  double sample_tail(RngStream& rng) const;

  std::vector<Component> components_;
  std::vector<double> tail_cumulative_;
  ContinuousTarget target_;
};

}  // namespace rrs::singular
