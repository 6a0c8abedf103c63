#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "rrs/error.hpp"
#include "rrs/rng.hpp"
#include "rrs/sample_record.hpp"
#include "rrs/target.hpp"

namespace rrs {

struct SamplerOptions {
  /// Rejection loops abort with kNonTermination after this many cycles.
  std::uint64_t max_cycles = 1'000'000;
};

template <class T>
using value_of = typename std::remove_cvref_t<T>::value_type;

namespace detail {

inline void require_positive_mass(double total_p) {
  if (!(total_p > 0.0)) {
    throw Error(ErrorCode::kDegenerateTarget, "I[p] must be positive");
  }
}

// Mass of S that q over-covers; negative beyond rounding means the three
// cached sums cannot belong to the same (p, q).
inline double deficit_of(double total_p, double total_q, double excess) {
  const double deficit = total_q - total_p + excess;
  const double scale = std::max({total_p, total_q, excess});
  if (deficit < -1e-9 * scale) {
    throw Error(ErrorCode::kMalformedTarget,
                "inconsistent sums: I[q] - I[p] + excess = " + std::to_string(deficit));
  }
  return std::max(deficit, 0.0);
}

[[noreturn]] inline void throw_non_termination(std::uint64_t cycles) {
  throw Error(ErrorCode::kNonTermination,
              "no acceptance after " + std::to_string(cycles) + " cycles");
}

}  // namespace detail

/// Reduced rejection for I[p] >= I[q]. At most one q-draw and at most one
/// excess draw per call; never loops.
template <SamplingTarget T>
SampleRecord<value_of<T>> algorithm_one(T& target, RngStream& rng) {
  const double total_p = target.total_p();
  const double total_q = target.total_q();
  const double excess = target.excess_total();
  detail::require_positive_mass(total_p);
  if (total_p < total_q) {
    throw Error(ErrorCode::kMalformedTarget, "algorithm_one requires I[p] >= I[q]");
  }
  detail::deficit_of(total_p, total_q, excess);

  SampleRecord<value_of<T>> rec;
  // Step (i): straight to the excess region with probability (I[p]-I[q])/I[p].
  // The excess mass caps the step so rounding in I[p]-I[q] never sends an
  // empty excess region here.
  const double direct_mass = std::min(total_p - total_q, excess);
  if (rng.uniform() * total_p < direct_mass) {
    const auto draw = target.sample_excess(rng);
    rec.value = draw.value;
    rec.branch = Branch::kExcessDirect;
    rec.excess_draws = 1;
    rec.excess_proposals = draw.attempts;
    return rec;
  }

  // Step (ii): propose from q.
  const auto x = target.sample_q(rng);
  rec.value = x;
  rec.proposals_used = 1;
  if (target.in_excess(x)) {
    rec.branch = Branch::kQAcceptL;
    return rec;
  }
  if (rng.uniform() * target.q_at(x) < target.p_at(x)) {
    rec.branch = Branch::kQAcceptS;
    return rec;
  }

  // Step (iii): the rejected proposal is replaced by an excess draw.
  if (!(excess > 0.0)) {
    throw Error(ErrorCode::kMalformedTarget,
                "rejection in S with empty excess region while I[p] >= I[q]");
  }
  const auto draw = target.sample_excess(rng);
  rec.value = draw.value;
  rec.branch = Branch::kReplacedByExcess;
  rec.excess_draws = 1;
  rec.excess_proposals = draw.attempts;
  return rec;
}

/// Probability of replacing a rejected proposal with an excess draw:
/// excess / (I[q] - I[p] + excess). Zero when the excess region is empty.
inline double replacement_probability(double total_p, double total_q, double excess) {
  if (!(excess > 0.0)) return 0.0;
  return excess / detail::deficit_of(total_p, total_q, excess);
}

/// Reduced rejection for I[p] < I[q]: cycles of {q-draw, accept on L or with
/// p/q on S, otherwise replace by an excess draw with probability p_a} until
/// a value is returned. Also accepts I[p] == I[q], where it coincides with
/// algorithm_one.
template <SamplingTarget T>
SampleRecord<value_of<T>> algorithm_two(T& target, RngStream& rng,
                                         const SamplerOptions& options = {}) {
  const double total_p = target.total_p();
  const double total_q = target.total_q();
  const double excess = target.excess_total();
  detail::require_positive_mass(total_p);
  if (total_p > total_q) {
    throw Error(ErrorCode::kMalformedTarget, "algorithm_two requires I[p] <= I[q]");
  }
  if (total_p < total_q && !(detail::deficit_of(total_p, total_q, excess) > 0.0)) {
    throw Error(ErrorCode::kMalformedTarget, "integral of (q - p) over S is zero");
  }
  const double p_replace = replacement_probability(total_p, total_q, excess);

  SampleRecord<value_of<T>> rec;
  for (std::uint64_t cycle = 0; cycle < options.max_cycles; ++cycle) {
    const auto x = target.sample_q(rng);
    ++rec.proposals_used;
    if (target.in_excess(x)) {
      rec.value = x;
      rec.branch = Branch::kQAcceptL;
      return rec;
    }
    if (rng.uniform() * target.q_at(x) < target.p_at(x)) {
      rec.value = x;
      rec.branch = Branch::kQAcceptS;
      return rec;
    }
    if (p_replace > 0.0 && rng.uniform() < p_replace) {
      const auto draw = target.sample_excess(rng);
      rec.value = draw.value;
      rec.branch = Branch::kReplacedByExcess;
      ++rec.excess_draws;
      rec.excess_proposals += draw.attempts;
      return rec;
    }
  }
  detail::throw_non_termination(options.max_cycles);
}

/// Dispatches on the relative masses: algorithm_one when I[p] >= I[q],
/// algorithm_two otherwise.
template <SamplingTarget T>
SampleRecord<value_of<T>> reduced_rejection_sample(T& target, RngStream& rng,
                                                   const SamplerOptions& options = {}) {
  if (target.total_p() >= target.total_q()) return algorithm_one(target, rng);
  return algorithm_two(target, rng, options);
}

/// Classic acceptance-rejection: q must enclose p (empty excess region).
template <SamplingTarget T>
SampleRecord<value_of<T>> acceptance_rejection_sample(T& target, RngStream& rng,
                                                      const SamplerOptions& options = {}) {
  detail::require_positive_mass(target.total_p());
  if (!(target.total_q() > 0.0)) {
    throw Error(ErrorCode::kDegenerateTarget, "I[q] must be positive");
  }
  if (target.excess_total() > 0.0) {
    throw Error(ErrorCode::kNotEnclosing, "q does not enclose p");
  }
  SampleRecord<value_of<T>> rec;
  for (std::uint64_t cycle = 0; cycle < options.max_cycles; ++cycle) {
    const auto x = target.sample_q(rng);
    ++rec.proposals_used;
    if (target.in_excess(x)) {
      throw Error(ErrorCode::kNotEnclosing, "proposal landed where p > q");
    }
    if (rng.uniform() * target.q_at(x) < target.p_at(x)) {
      rec.value = x;
      rec.branch = Branch::kQAcceptS;
      return rec;
    }
  }
  detail::throw_non_termination(options.max_cycles);
}

}  // namespace rrs
