#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rslab {

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kIndexOutOfRange,
  kInvalidParameter,
  kMissingEdgeColour,
  kParseError,
  kNotRepresentable,
  kConstructionInvalid,
  kOracleBudgetExceeded,
  kBudgetExceeded,
  kRegularGraph,
  kCacheMismatch,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code identifies the failure class and what() carries a readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rslab
