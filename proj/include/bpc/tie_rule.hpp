#pragma once

namespace bpc {

/// Which half of the symbol range an encoder draws from when the running
/// prefix deviation is exactly zero.
enum class TieRule {
  kLowerHalf,
  kUpperHalf,
};

}  // namespace bpc
