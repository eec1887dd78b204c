#include "rslab/error.hpp"

namespace rslab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kMissingEdgeColour: return "MissingEdgeColour";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotRepresentable: return "NotRepresentable";
    case ErrorCode::kConstructionInvalid: return "ConstructionInvalid";
    case ErrorCode::kOracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kRegularGraph: return "RegularGraph";
    case ErrorCode::kCacheMismatch: return "CacheMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace rslab
