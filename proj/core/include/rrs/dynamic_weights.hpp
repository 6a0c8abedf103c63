#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rrs/alias_table.hpp"
#include "rrs/compensated_sum.hpp"
#include "rrs/marsaglia_table.hpp"
#include "rrs/reduced_rejection.hpp"
#include "rrs/rng.hpp"
#include "rrs/sample_record.hpp"

namespace rrs {

/// Index set with O(1) insert, erase, membership and uniform pick.
class ExcessSet {
 public:
  explicit ExcessSet(std::size_t capacity = 0) : position_(capacity, kAbsent) {}

  bool contains(std::size_t i) const noexcept { return position_[i] != kAbsent; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const std::uint32_t> members() const noexcept { return members_; }

  void insert(std::size_t i) {
    if (contains(i)) return;
    position_[i] = static_cast<std::uint32_t>(members_.size());
    members_.push_back(static_cast<std::uint32_t>(i));
  }

  void erase(std::size_t i) {
    if (!contains(i)) return;
    const std::uint32_t slot = position_[i];
    const std::uint32_t last = members_.back();
    members_[slot] = last;
    position_[last] = slot;
    members_.pop_back();
    position_[i] = kAbsent;
  }

  void clear() noexcept {
    for (std::uint32_t i : members_) position_[i] = kAbsent;
    members_.clear();
  }

  std::size_t pick(RngStream& rng) const {
    return members_[rng.uniform_index(members_.size())];
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> position_;
};

enum class TableBackend { kMarsaglia, kAlias };

struct DynamicWeightsOptions {
  /// Reinitialize once |L| exceeds this. 0 selects ceil(4 * sqrt(n)).
  std::size_t reinit_threshold = 0;
  TableBackend table = TableBackend::kMarsaglia;
  int table_groups = MarsagliaTable::kDefaultGroups;
  /// Also reinitialize when the rolling rejection fraction of the excess
  /// sampler exceeds `rejection_threshold` (checked after updates).
  bool efficiency_trigger = false;
  double rejection_threshold = 0.9;
  std::uint64_t efficiency_window = 1024;
  SamplerOptions sampler{};
};

std::size_t default_reinit_threshold(std::size_t n);

/// Dynamic weighted index sampler.
///
/// Holds mutable weights p and a proposal snapshot q frozen at the last
/// (re)initialization. q-draws come from a precomputed table over q; draws
/// from the excess region L = {i : p_i > q_i} use acceptance-rejection with a
/// uniform proposal over L and a height B >= max_{i in L}(p_i - q_i). Updates
/// are O(1) and never touch q until |L| exceeds the reinit threshold.
class DynamicWeights {
 public:
  using value_type = std::size_t;

  /// Throws kAllZeroWeights, kNegativeWeight, or kInvalidParams.
  explicit DynamicWeights(std::span<const double> weights,
                          DynamicWeightsOptions options = {});

  std::size_t size() const noexcept { return p_.size(); }
  double p_at(std::size_t i) const noexcept { return p_[i]; }
  double q_at(std::size_t i) const noexcept { return q_[i]; }
  std::span<const double> p() const noexcept { return p_; }
  std::span<const double> q() const noexcept { return q_; }
  bool in_excess(std::size_t i) const noexcept { return p_[i] > q_[i]; }

  double total_p() const noexcept { return sum_p_.value(); }
  double total_q() const noexcept { return sum_q_; }
  double excess_total() const noexcept {
    const double e = excess_sum_.value();
    return e > 0.0 ? e : 0.0;
  }

  const ExcessSet& excess_set() const noexcept { return excess_; }
  double excess_bound() const noexcept { return bound_; }
  std::size_t reinit_threshold() const noexcept { return threshold_; }
  std::uint64_t reinit_count() const noexcept { return reinit_count_; }
  const DynamicWeightsOptions& options() const noexcept { return options_; }

  /// Replaces p_i. Throws kIndexOutOfRange or kNegativeWeight.
  void update_weight(std::size_t i, double new_p);

  /// q := p, L := {}, sums recomputed exactly, table rebuilt, B := 0.
  void reinitialize();

  std::size_t sample_q(RngStream& rng) const {
    return options_.table == TableBackend::kMarsaglia ? marsaglia_.sample(rng)
                                                      : alias_.sample(rng);
  }

  ExcessDraw<std::size_t> sample_excess(RngStream& rng);

  /// Index drawn with probability p_i / sum(p).
  SampleRecord<std::size_t> sample(RngStream& rng) {
    return reduced_rejection_sample(*this, rng, options_.sampler);
  }

  /// Largest relative difference between the maintained sums and a full
  /// recomputation (the excess sum is measured against max(excess, I[p])).
  double sum_drift() const;

  /// Full-scan check of L membership, the bound B and |L| <= threshold.
  bool invariants_hold() const;

 private:
  void rebuild_table();
  bool efficiency_exceeded() const noexcept;

  DynamicWeightsOptions options_;
  std::vector<double> p_;
  std::vector<double> q_;
  CompensatedSum sum_p_;
  double sum_q_ = 0.0;
  CompensatedSum excess_sum_;
  ExcessSet excess_;
  double bound_ = 0.0;
  std::size_t threshold_ = 1;
  std::uint64_t reinit_count_ = 0;
  MarsagliaTable marsaglia_;
  AliasTable alias_;
  std::uint64_t excess_attempts_ = 0;
  std::uint64_t excess_rejections_ = 0;
};

}  // namespace rrs
