#include "rrs/path_oracle.hpp"

#include <string>

#include "rrs/error.hpp"

namespace rrs {

double path_probability_oracle(const DiscreteTarget& target, std::size_t z) {
  const std::size_t n = target.size();
  if (n > kOracleMaxSupport) {
    throw Error(ErrorCode::kUnsupportedSize,
                std::to_string(n) + " support points (max 64)");
  }
  if (z >= n) throw Error(ErrorCode::kIndexOutOfRange, "oracle index");

  // Everything is recomputed here in extended precision straight from the
  // weights, independent of the target's cached sums.
  const auto p = target.p();
  const auto q = target.q();
  long double total_p = 0;
  long double total_q = 0;
  long double excess = 0;   // integral of (p - q) over L
  long double deficit = 0;  // integral of (q - p) over S
  for (std::size_t i = 0; i < n; ++i) {
    total_p += p[i];
    total_q += q[i];
    if (p[i] > q[i]) {
      excess += static_cast<long double>(p[i]) - q[i];
    } else {
      deficit += static_cast<long double>(q[i]) - p[i];
    }
  }
  if (!(total_p > 0)) throw Error(ErrorCode::kDegenerateTarget, "I[p] must be positive");

  const long double pz = p[z];
  const long double qz = q[z];
  const bool z_in_excess = pz > qz;
  const long double excess_share = z_in_excess ? (pz - qz) / excess : 0;

  if (total_p >= total_q) {
    const long double pick_direct = (total_p - total_q) / total_p;
    const long double pick_q = total_q / total_p;
    const long double draw_z = total_q > 0 ? qz / total_q : 0;
    if (!z_in_excess) {
      // Selected (ii), drew z, accepted in (ii.b).
      return static_cast<double>(pick_q * draw_z * (qz > 0 ? pz / qz : 0));
    }
    const long double from_direct = pick_direct * excess_share;
    const long double from_q = pick_q * draw_z;
    const long double reach_replacement = total_q > 0 ? deficit / total_q : 0;
    const long double from_replacement = pick_q * reach_replacement * excess_share;
    return static_cast<double>(from_direct + from_q + from_replacement);
  }

  const long double draw_z = qz / total_q;
  const long double p_replace = excess > 0 ? excess / deficit : 0;
  const long double reach_iv = deficit / total_q;
  long double per_cycle = 0;
  if (!z_in_excess) {
    per_cycle = draw_z * (qz > 0 ? pz / qz : 0);
  } else {
    per_cycle = draw_z + reach_iv * p_replace * excess_share;
  }
  const long double cycle_fails = reach_iv * (1 - p_replace);
  return static_cast<double>(per_cycle / (1 - cycle_fails));
}

}  // namespace rrs
