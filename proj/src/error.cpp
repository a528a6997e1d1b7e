#include "bpc/error.hpp"

namespace bpc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPermutation: return "NotPermutation";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSpecMismatch: return "SpecMismatch";
    case ErrorCode::kOddLength: return "OddLength";
    case ErrorCode::kSourceExhausted: return "SourceExhausted";
    case ErrorCode::kParamInvalid: return "ParamInvalid";
    case ErrorCode::kSelectorViolation: return "SelectorViolation";
    case ErrorCode::kNotCodeword: return "NotCodeword";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SourceExhausted::SourceExhausted(std::size_t step, const std::string& witness)
    : Error(ErrorCode::kSourceExhausted,
            "mandated source empty at step " + std::to_string(step) + "; " + witness),
      step_(step),
      witness_(witness) {}

}  // namespace bpc
