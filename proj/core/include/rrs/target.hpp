#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rrs/alias_table.hpp"
#include "rrs/rng.hpp"
#include "rrs/sample_record.hpp"

namespace rrs {

/// What the reduced-rejection samplers need from a (p, q) pair: the three
/// masses I[p], I[q] and the excess mass over L = {p > q}, a sampler for q,
/// a sampler for p - q restricted to L, and pointwise access to p and q.
template <class T>
concept SamplingTarget = requires(T& t, RngStream& rng,
                                  const typename std::remove_cvref_t<T>::value_type& x) {
  typename std::remove_cvref_t<T>::value_type;
  { t.total_p() } -> std::convertible_to<double>;
  { t.total_q() } -> std::convertible_to<double>;
  { t.excess_total() } -> std::convertible_to<double>;
  { t.sample_q(rng) } -> std::same_as<typename std::remove_cvref_t<T>::value_type>;
  { t.sample_excess(rng) }
      -> std::same_as<ExcessDraw<typename std::remove_cvref_t<T>::value_type>>;
  { t.in_excess(x) } -> std::convertible_to<bool>;
  { t.p_at(x) } -> std::convertible_to<double>;
  { t.q_at(x) } -> std::convertible_to<double>;
};

/// Caller-supplied masses, validated against recomputation.
struct TargetSums {
  double total_p = 0.0;
  double total_q = 0.0;
  double excess_total = 0.0;
};

inline constexpr double kSumRelativeTolerance = 1e-9;

/// Immutable discrete (p, q) pair over indices 0..n-1 with counting measure.
///
/// Ties p_i == q_i belong to S. q-draws and excess draws are served by alias
/// tables built once at construction, so sampling is O(1).
class DiscreteTarget {
 public:
  using value_type = std::size_t;

  /// Throws kMalformedTarget on length mismatch, negative or non-finite
  /// weights, or (when `supplied` is given) sums that disagree with exact
  /// recomputation beyond 1e-9 relative.
  DiscreteTarget(std::vector<double> p, std::vector<double> q,
                 std::optional<TargetSums> supplied = std::nullopt);

  std::size_t size() const noexcept { return p_.size(); }
  std::span<const double> p() const noexcept { return p_; }
  std::span<const double> q() const noexcept { return q_; }

  double total_p() const noexcept { return total_p_; }
  double total_q() const noexcept { return total_q_; }
  double excess_total() const noexcept { return excess_total_; }
  /// Integral of (q - p) over S; equals total_q - total_p + excess_total.
  double deficit_total() const noexcept { return deficit_total_; }

  bool in_excess(std::size_t i) const noexcept { return p_[i] > q_[i]; }
  double p_at(std::size_t i) const noexcept { return p_[i]; }
  double q_at(std::size_t i) const noexcept { return q_[i]; }
  std::size_t excess_count() const noexcept { return excess_count_; }

  std::size_t sample_q(RngStream& rng) const { return q_table_.sample(rng); }
  ExcessDraw<std::size_t> sample_excess(RngStream& rng) const {
    return {excess_table_.sample(rng), 1};
  }

 private:
  std::vector<double> p_;
  std::vector<double> q_;
  double total_p_ = 0.0;
  double total_q_ = 0.0;
  double excess_total_ = 0.0;
  double deficit_total_ = 0.0;
  std::size_t excess_count_ = 0;
  AliasTable q_table_;
  AliasTable excess_table_;
};

/// Continuous (p, q) pair on a subset of the real line with Lebesgue
/// measure. The caller supplies exact samplers; their correctness (q-draws
/// distributed as q / I[q], excess draws as (p - q) / excess on L) is the
/// caller's responsibility.
struct ContinuousTarget {
  using value_type = double;

  std::function<double(double)> eval_p;
  std::function<double(double)> eval_q;
  double mass_p = 0.0;
  double mass_q = 0.0;
  double mass_excess = 0.0;
  std::function<double(RngStream&)> draw_q;
  std::function<double(RngStream&)> draw_excess;

  double total_p() const noexcept { return mass_p; }
  double total_q() const noexcept { return mass_q; }
  double excess_total() const noexcept { return mass_excess; }
  double sample_q(RngStream& rng) const { return draw_q(rng); }
  ExcessDraw<double> sample_excess(RngStream& rng) const {
    return {draw_excess(rng), 1};
  }
  bool in_excess(double x) const { return eval_p(x) > eval_q(x); }
  double p_at(double x) const { return eval_p(x); }
  double q_at(double x) const { return eval_q(x); }
};

}  // namespace rrs
