#pragma once

#include <cstddef>

#include "rrs/target.hpp"

namespace rrs {

inline constexpr std::size_t kOracleMaxSupport = 64;

/// Closed-form probability that reduced_rejection_sample returns `z`,
/// assembled branch by branch from the sampler's step probabilities rather
/// than from p_z / I[p]. Agreement of the two is the correctness check.
///
/// I[p] >= I[q]: z in S can only come from an accepted q-draw; z in L can
/// come from the direct excess step, from a q-draw landing on z, or from an
/// excess draw replacing a rejection in S.
/// I[p] < I[q]: the per-cycle return probability of z is divided by the
/// per-cycle probability of returning anything (a geometric series over
/// failed cycles).
///
/// Throws kUnsupportedSize beyond 64 support points and kDegenerateTarget
/// when I[p] == 0.
double path_probability_oracle(const DiscreteTarget& target, std::size_t z);

}  // namespace rrs
