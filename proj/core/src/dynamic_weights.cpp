#include "rrs/dynamic_weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rrs/error.hpp"

namespace rrs {

std::size_t default_reinit_threshold(std::size_t n) {
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(4.0 * std::sqrt(static_cast<double>(n)))));
}

DynamicWeights::DynamicWeights(std::span<const double> weights,
                               DynamicWeightsOptions options)
    : options_(options), p_(weights.begin(), weights.end()), excess_(weights.size()) {
  for (double w : p_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kNegativeWeight, "weight " + std::to_string(w));
    }
  }
  if (std::none_of(p_.begin(), p_.end(), [](double w) { return w > 0.0; })) {
    throw Error(ErrorCode::kAllZeroWeights, "at least one weight must be positive");
  }
  if (!(options_.rejection_threshold > 0.0 && options_.rejection_threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "rejection threshold must be in (0, 1)");
  }
  threshold_ = options_.reinit_threshold == 0 ? default_reinit_threshold(p_.size())
                                              : options_.reinit_threshold;
  q_ = p_;
  sum_p_.reset(compensated_sum(p_));
  sum_q_ = sum_p_.value();
  rebuild_table();
}

void DynamicWeights::rebuild_table() {
  if (options_.table == TableBackend::kMarsaglia) {
    marsaglia_ = MarsagliaTable(q_, options_.table_groups);
  } else {
    alias_ = AliasTable(q_);
  }
}

void DynamicWeights::update_weight(std::size_t i, double new_p) {
  if (i >= p_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(i) + " >= " + std::to_string(p_.size()));
  }
  if (!(new_p >= 0.0) || !std::isfinite(new_p)) {
    throw Error(ErrorCode::kNegativeWeight, "weight " + std::to_string(new_p));
  }
  const double old_p = p_[i];
  const double qi = q_[i];
  p_[i] = new_p;
  sum_p_.add(new_p);
  sum_p_.add(-old_p);

  if (old_p > qi) excess_sum_.add(-(old_p - qi));
  if (new_p > qi) {
    const double gap = new_p - qi;
    excess_sum_.add(gap);
    excess_.insert(i);
    bound_ = std::max(bound_, gap);
  } else {
    excess_.erase(i);
  }
  if (excess_.empty()) excess_sum_.reset();

  if (excess_.size() > threshold_ || (!excess_.empty() && efficiency_exceeded())) {
    reinitialize();
  }
}

bool DynamicWeights::efficiency_exceeded() const noexcept {
  return options_.efficiency_trigger && excess_attempts_ >= options_.efficiency_window &&
         static_cast<double>(excess_rejections_) >
             options_.rejection_threshold * static_cast<double>(excess_attempts_);
}

void DynamicWeights::reinitialize() {
  const double fresh_sum = compensated_sum(p_);
  if (!(fresh_sum > 0.0)) {
    throw Error(ErrorCode::kAllZeroWeights, "cannot reinitialize on all-zero weights");
  }
  q_ = p_;
  sum_p_.reset(fresh_sum);
  sum_q_ = fresh_sum;
  excess_sum_.reset();
  excess_.clear();
  bound_ = 0.0;
  excess_attempts_ = 0;
  excess_rejections_ = 0;
  ++reinit_count_;
  rebuild_table();
}

ExcessDraw<std::size_t> DynamicWeights::sample_excess(RngStream& rng) {
  if (excess_.empty()) {
    throw Error(ErrorCode::kMalformedTarget, "excess draw requested from an empty set");
  }
  ExcessDraw<std::size_t> draw;
  draw.attempts = 0;
  for (std::uint64_t attempt = 0; attempt < options_.sampler.max_cycles; ++attempt) {
    ++draw.attempts;
    const std::size_t i = excess_.pick(rng);
    if (rng.uniform() * bound_ < p_[i] - q_[i]) {
      draw.value = i;
      excess_attempts_ += draw.attempts;
      excess_rejections_ += draw.attempts - 1;
      if (excess_attempts_ >= 2 * options_.efficiency_window) {
        excess_attempts_ /= 2;
        excess_rejections_ /= 2;
      }
      return draw;
    }
  }
  throw Error(ErrorCode::kNonTermination, "excess sampler did not accept");
}

double DynamicWeights::sum_drift() const {
  CompensatedSum exact_p;
  CompensatedSum exact_q;
  CompensatedSum exact_excess;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    exact_p.add(p_[i]);
    exact_q.add(q_[i]);
    if (p_[i] > q_[i]) exact_excess.add(p_[i] - q_[i]);
  }
  auto relative = [](double maintained, double exact, double scale) {
    return std::abs(maintained - exact) / std::max(scale, 1e-300);
  };
  const double ep = exact_p.value();
  return std::max({relative(total_p(), ep, std::abs(ep)),
                   relative(total_q(), exact_q.value(), std::abs(exact_q.value())),
                   relative(excess_sum_.value(), exact_excess.value(),
                            std::max(exact_excess.value(), ep))});
}

bool DynamicWeights::invariants_hold() const {
  if (excess_.size() > threshold_) return false;
  std::size_t members = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const bool should = p_[i] > q_[i];
    if (should != excess_.contains(i)) return false;
    if (should) {
      ++members;
      if (p_[i] - q_[i] > bound_) return false;
    }
  }
  return members == excess_.size();
}

}  // namespace rrs
