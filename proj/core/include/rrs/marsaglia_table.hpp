#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rrs/rng.hpp"

namespace rrs {

/// Marsaglia's table method for O(1) discrete sampling.
///
/// Each probability is quantized to `groups` base-256 digits. Level k holds
/// index i repeated d_ik times, where d_ik is the k-th digit of i's quantized
/// probability; a single B-bit uniform (B = 8 * groups) walks the levels by
/// comparing against cumulative thresholds. Mass lost to truncation falls
/// through to a residual bucket sampled by linear scan, so the sampler is
/// exact, not merely 2^-B accurate.
class MarsagliaTable {
 public:
  static constexpr int kBitsPerGroup = 8;
  static constexpr int kDefaultGroups = 4;

  MarsagliaTable() = default;

  /// Throws kAllZeroWeights / kNegativeWeight; groups must be in [1, 4].
  explicit MarsagliaTable(std::span<const double> weights,
                          int groups = kDefaultGroups);

  std::size_t size() const noexcept { return n_; }
  int groups() const noexcept { return groups_; }

  std::size_t sample(RngStream& rng) const {
    const std::uint64_t j = rng.next_u64() >> (64 - total_bits_);
    for (int k = 0; k < groups_; ++k) {
      if (j < thresholds_[k]) {
        const std::uint64_t offset = j - (k == 0 ? 0 : thresholds_[k - 1]);
        return entries_[level_begin_[k] + (offset >> shift_[k])];
      }
    }
    return sample_residual(rng);
  }

  /// Probability of the residual bucket: 1 - (table mass).
  double residual_probability() const noexcept { return residual_probability_; }
  std::size_t table_entries() const noexcept { return entries_.size(); }

  /// Per-index return probabilities obtained by counting every table slot
  /// and adding each index's share of the residual bucket.
  std::vector<double> exhaustive_probabilities() const;

 private:
  std::size_t sample_residual(RngStream& rng) const;

  std::size_t n_ = 0;
  int groups_ = 0;
  int total_bits_ = 0;
  std::vector<std::uint32_t> entries_;
  std::vector<std::size_t> level_begin_;
  std::vector<std::uint64_t> thresholds_;
  std::vector<int> shift_;
  std::vector<std::uint32_t> residual_index_;
  std::vector<double> residual_cumulative_;
  double residual_probability_ = 0.0;
};

}  // namespace rrs
