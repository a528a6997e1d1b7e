#pragma once

#include <string>

#include "bpc/analysis.hpp"
#include "bpc/error.hpp"

namespace bpc::analysis::detail {

inline void check_limit(std::size_t n, std::size_t limit) {
  if (n == 0) throw Error(ErrorCode::kParamInvalid, "n must be positive");
  if (n > limit || n > kHardEnumerationLimit) {
    throw Error(ErrorCode::kLimitExceeded,
                "n=" + std::to_string(n) + " exceeds enumeration limit " + std::to_string(limit));
  }
}

inline void check_disc_block(std::size_t n, std::size_t b) {
  if (b < 2 || b > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "b=" + std::to_string(b) + " outside [2,n]");
  }
}

}  // namespace bpc::analysis::detail
