#pragma once

#include <cstdint>
#include <string_view>

namespace rrs {

/// Which step of the sampler produced the returned value.
enum class Branch : std::uint8_t {
  kExcessDirect,      // drawn straight from the excess region (p - q on L)
  kQAcceptL,          // q-draw landed in L, accepted unconditionally
  kQAcceptS,          // q-draw landed in S, accepted with probability p/q
  kReplacedByExcess,  // q-draw rejected in S and replaced by an excess draw
  kCycleRetry,        // attempt rejected and the cycle restarted; never terminal
};

constexpr std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::kExcessDirect: return "excess_direct";
    case Branch::kQAcceptL: return "q_accept_L";
    case Branch::kQAcceptS: return "q_accept_S";
    case Branch::kReplacedByExcess: return "replaced_by_excess";
    case Branch::kCycleRetry: return "cycle_retry";
  }
  return "unknown";
}

inline constexpr int kBranchCount = 5;

template <class Value>
struct SampleRecord {
  Value value{};
  Branch branch = Branch::kQAcceptS;
  /// Number of q-draws consumed.
  std::uint32_t proposals_used = 0;
  /// Number of (p - q) draws consumed.
  std::uint32_t excess_draws = 0;
  /// Proposals spent inside the excess sampler (>= excess_draws when that
  /// sampler is itself a rejection loop).
  std::uint32_t excess_proposals = 0;

  std::uint64_t total_proposals() const noexcept {
    return std::uint64_t{proposals_used} + excess_proposals;
  }

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// Result of one draw from an excess region: the value and how many
/// internal proposals it took.
template <class Value>
struct ExcessDraw {
  Value value{};
  std::uint32_t attempts = 1;
};

}  // namespace rrs
