#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bpc {

enum class ErrorCode {
  kNotPermutation,
  kIndexOutOfRange,
  kSpecMismatch,
  kOddLength,
  kSourceExhausted,
  kParamInvalid,
  kSelectorViolation,
  kNotCodeword,
  kLimitExceeded,
};

std::string_view to_string(ErrorCode code);

/// Base of every error raised by the library. `code()` identifies the
/// failure class; `what()` carries a human-readable description.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An encoder found its mandated source empty. This is a defect signal: the
/// message holds the full reproducible state at the failing step.
class SourceExhausted : public Error {
 public:
  SourceExhausted(std::size_t step, const std::string& witness);

  std::size_t step() const noexcept { return step_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::size_t step_;
  std::string witness_;
};

}  // namespace bpc
