#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rrs {

enum class ErrorCode {
  kMalformedTarget,
  kDegenerateTarget,
  kNonTermination,
  kNotEnclosing,
  kUnsupportedSize,
  kAllZeroWeights,
  kIndexOutOfRange,
  kNegativeWeight,
  kInconsistentWeights,
  kInvalidParams,
  kExhaustedSystem,
  kNegativeCount,
  kInvalidNetwork,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kMalformedTarget: return "MalformedTarget";
    case ErrorCode::kDegenerateTarget: return "DegenerateTarget";
    case ErrorCode::kNonTermination: return "NonTermination";
    case ErrorCode::kNotEnclosing: return "NotEnclosing";
    case ErrorCode::kUnsupportedSize: return "UnsupportedSize";
    case ErrorCode::kAllZeroWeights: return "AllZeroWeights";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kInconsistentWeights: return "InconsistentWeights";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kExhaustedSystem: return "ExhaustedSystem";
    case ErrorCode::kNegativeCount: return "NegativeCount";
    case ErrorCode::kInvalidNetwork: return "InvalidNetwork";
  }
  return "Unknown";
}

}  // namespace rrs
