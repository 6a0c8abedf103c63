#include "rrs/target.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rrs/compensated_sum.hpp"
#include "rrs/error.hpp"

namespace rrs {
namespace {

bool close_relative(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= kSumRelativeTolerance * scale;
}

}  // namespace

DiscreteTarget::DiscreteTarget(std::vector<double> p, std::vector<double> q,
                               std::optional<TargetSums> supplied)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() != q_.size()) {
    throw Error(ErrorCode::kMalformedTarget,
                "p has " + std::to_string(p_.size()) + " entries, q has " +
                    std::to_string(q_.size()));
  }
  if (p_.empty()) throw Error(ErrorCode::kMalformedTarget, "empty target");

  CompensatedSum sum_p;
  CompensatedSum sum_q;
  CompensatedSum excess;
  CompensatedSum deficit;
  std::vector<double> excess_weights(p_.size(), 0.0);
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const double pi = p_[i];
    const double qi = q_[i];
    if (!(pi >= 0.0) || !(qi >= 0.0) || !std::isfinite(pi) || !std::isfinite(qi)) {
      throw Error(ErrorCode::kMalformedTarget,
                  "weights must be finite and non-negative (index " +
                      std::to_string(i) + ")");
    }
    sum_p.add(pi);
    sum_q.add(qi);
    if (pi > qi) {
      excess.add(pi - qi);
      excess_weights[i] = pi - qi;
      ++excess_count_;
    } else {
      deficit.add(qi - pi);
    }
  }
  total_p_ = sum_p.value();
  total_q_ = sum_q.value();
  excess_total_ = excess.value();
  deficit_total_ = deficit.value();

  if (supplied) {
    if (!close_relative(supplied->total_p, total_p_) ||
        !close_relative(supplied->total_q, total_q_) ||
        !close_relative(supplied->excess_total, excess_total_)) {
      throw Error(ErrorCode::kMalformedTarget,
                  "supplied sums disagree with recomputation");
    }
  }

  if (total_q_ > 0.0) q_table_ = AliasTable(q_);
  if (excess_total_ > 0.0) excess_table_ = AliasTable(excess_weights);
}

}  // namespace rrs
