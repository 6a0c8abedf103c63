#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rrs/rng.hpp"

namespace rrs {

/// Walker/Vose alias table: O(n) build, O(1) exact sampling from
/// weights / sum(weights).
class AliasTable {
 public:
  AliasTable() = default;

  /// Throws Error(kAllZeroWeights) if no weight is positive and
  /// Error(kNegativeWeight) on negative or non-finite input.
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const noexcept { return prob_.size(); }
  bool empty() const noexcept { return prob_.empty(); }
  double total() const noexcept { return total_; }

  std::size_t sample(RngStream& rng) const {
    const std::size_t column = rng.uniform_index(prob_.size());
    return rng.uniform() < prob_[column] ? column : alias_[column];
  }

  /// Exact probability that sample() returns `index`, accounted from the
  /// table columns (not from the input weights).
  double probability(std::size_t index) const;

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
  double total_ = 0.0;
};

}  // namespace rrs
