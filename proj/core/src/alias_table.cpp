#include "rrs/alias_table.hpp"

#include <cmath>
#include <string>

#include "rrs/compensated_sum.hpp"
#include "rrs/error.hpp"

namespace rrs {

AliasTable::AliasTable(std::span<const double> weights) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kNegativeWeight,
                  "alias table weight " + std::to_string(w));
    }
  }
  total_ = compensated_sum(weights);
  if (!(total_ > 0.0)) {
    throw Error(ErrorCode::kAllZeroWeights, "alias table needs a positive weight");
  }

  const std::size_t n = weights.size();
  prob_.assign(n, 1.0);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small;
  std::vector<std::uint32_t> large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    alias_[i] = static_cast<std::uint32_t>(i);
    scaled[i] = weights[i] * static_cast<double>(n) / total_;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }

  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding; they keep prob 1 and alias to themselves.
  // A leftover column with zero input weight must never fire, so it defers
  // entirely to the heaviest index.
  std::uint32_t heaviest = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (weights[i] > weights[heaviest]) heaviest = static_cast<std::uint32_t>(i);
  }
  for (std::uint32_t i : small) {
    prob_[i] = 1.0;
    alias_[i] = i;
    if (weights[i] == 0.0) {
      prob_[i] = 0.0;
      alias_[i] = heaviest;
    }
  }
}

double AliasTable::probability(std::size_t index) const {
  const double n = static_cast<double>(prob_.size());
  CompensatedSum mass;
  mass.add(prob_[index]);
  for (std::size_t column = 0; column < prob_.size(); ++column) {
    if (alias_[column] == index && column != index) mass.add(1.0 - prob_[column]);
  }
  return mass.value() / n;
}

}  // namespace rrs
