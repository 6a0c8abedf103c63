#include "rrs/marsaglia_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rrs/compensated_sum.hpp"
#include "rrs/error.hpp"

namespace rrs {

MarsagliaTable::MarsagliaTable(std::span<const double> weights, int groups)
    : n_(weights.size()), groups_(groups), total_bits_(groups * kBitsPerGroup) {
  if (groups < 1 || groups > 4) {
    throw Error(ErrorCode::kInvalidParams,
                "table digit groups must be in [1, 4], got " + std::to_string(groups));
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kNegativeWeight, "table weight " + std::to_string(w));
    }
  }
  const double total = compensated_sum(weights);
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kAllZeroWeights, "table needs a positive weight");
  }

  const std::uint64_t full = std::uint64_t{1} << total_bits_;
  const double scale = std::ldexp(1.0, total_bits_) / total;
  std::vector<std::uint64_t> quantized(n_);
  std::vector<double> residual(n_);
  std::uint64_t quantized_total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const double x = weights[i] * scale;
    // Capped at full - 1 so every quantized value fits in `groups` digits.
    const std::uint64_t qi =
        std::min(static_cast<std::uint64_t>(std::floor(x)), full - 1);
    quantized[i] = qi;
    residual[i] = x - static_cast<double>(qi);
    quantized_total += qi;
  }
  // Rounding in weights[i] * scale can overshoot 2^B by a few units.
  while (quantized_total > full) {
    const auto it = std::max_element(quantized.begin(), quantized.end());
    const std::uint64_t cut = std::min(*it, quantized_total - full);
    *it -= cut;
    residual[static_cast<std::size_t>(it - quantized.begin())] += static_cast<double>(cut);
    quantized_total -= cut;
  }

  level_begin_.resize(groups_);
  thresholds_.resize(groups_);
  shift_.resize(groups_);
  std::uint64_t threshold = 0;
  for (int k = 0; k < groups_; ++k) {
    shift_[k] = kBitsPerGroup * (groups_ - 1 - k);
    level_begin_[k] = entries_.size();
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint64_t digit = (quantized[i] >> shift_[k]) & 0xFFu;
      entries_.insert(entries_.end(), digit, static_cast<std::uint32_t>(i));
    }
    const std::uint64_t count = entries_.size() - level_begin_[k];
    threshold += count << shift_[k];
    thresholds_[k] = threshold;
  }

  residual_probability_ = static_cast<double>(full - quantized_total) /
                          static_cast<double>(full);
  if (full > quantized_total) {
    CompensatedSum running;
    for (std::size_t i = 0; i < n_; ++i) {
      if (residual[i] > 0.0) {
        running.add(residual[i]);
        residual_index_.push_back(static_cast<std::uint32_t>(i));
        residual_cumulative_.push_back(running.value());
      }
    }
    if (residual_index_.empty()) {
      // Everything was capped at full - 1 on a single index.
      const auto heaviest = std::max_element(weights.begin(), weights.end());
      residual_index_.push_back(static_cast<std::uint32_t>(heaviest - weights.begin()));
      residual_cumulative_.push_back(1.0);
    }
  }
}

std::size_t MarsagliaTable::sample_residual(RngStream& rng) const {
  const double target = rng.uniform() * residual_cumulative_.back();
  const auto it = std::upper_bound(residual_cumulative_.begin(),
                                   residual_cumulative_.end(), target);
  const std::size_t slot = std::min<std::size_t>(
      static_cast<std::size_t>(it - residual_cumulative_.begin()),
      residual_index_.size() - 1);
  return residual_index_[slot];
}

std::vector<double> MarsagliaTable::exhaustive_probabilities() const {
  std::vector<long double> mass(n_, 0.0L);
  const long double full = std::ldexp(1.0L, total_bits_);
  for (int k = 0; k < groups_; ++k) {
    const std::size_t end =
        k + 1 < groups_ ? level_begin_[k + 1] : entries_.size();
    const long double slot_mass = std::ldexp(1.0L, shift_[k]) / full;
    for (std::size_t e = level_begin_[k]; e < end; ++e) mass[entries_[e]] += slot_mass;
  }
  if (!residual_index_.empty()) {
    double previous = 0.0;
    const double residual_total = residual_cumulative_.back();
    for (std::size_t r = 0; r < residual_index_.size(); ++r) {
      const double share = (residual_cumulative_[r] - previous) / residual_total;
      previous = residual_cumulative_[r];
      mass[residual_index_[r]] += static_cast<long double>(residual_probability_) * share;
    }
  }
  return {mass.begin(), mass.end()};
}

}  // namespace rrs
