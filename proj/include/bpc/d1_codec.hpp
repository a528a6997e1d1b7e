#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bpc/permutation.hpp"
#include "bpc/ranking.hpp"
#include "bpc/rational.hpp"
#include "bpc/tie_rule.hpp"

namespace bpc::d1 {

/// Two orderings of n/2 symbols each: gamma1 arranges the low half [1, n/2],
/// gamma2 (shifted by n/2) arranges the high half [n/2+1, n].
struct Input {
  Permutation gamma1;
  Permutation gamma2;

  /// Throws kParamInvalid if the halves differ in length.
  Input(Permutation g1, Permutation g2);

  std::size_t n() const noexcept { return 2 * gamma1.size(); }

  friend bool operator==(const Input&, const Input&) = default;
};

struct Options {
  /// Half taken when the prefix deviation is exactly zero. The default
  /// reproduces the reference worked example.
  TieRule tie = TieRule::kUpperHalf;
};

/// Greedy running-average encoder. The first symbol is always the head of
/// the low-half source; afterwards a positive prefix deviation draws from
/// the low half, a negative one from the high half. Linear time.
Permutation encode(const Input& input, Options options = {});

/// One reinsertion performed by the streaming encoder: `moved_symbol` was
/// pulled forward to 1-based `position` by adjacent transpositions.
struct TranspositionStep {
  std::size_t position = 0;
  int moved_symbol = 0;
  friend bool operator==(const TranspositionStep&, const TranspositionStep&) = default;
};

using TranspositionTrace = std::vector<TranspositionStep>;

struct StreamingResult {
  Permutation permutation;
  TranspositionTrace trace;
  /// Working sequence before any move: (O1(1), O2(1), O1(2), O2(2), ...).
  Permutation interleaved;
  /// Prefix deviation after the first fixed symbol.
  Rational initial_deviation;
};

/// Same code as `encode`, computed in place on the interleaving of both
/// sources with two candidate pointers and one running deviation.
StreamingResult encode_streaming(const Input& input, Options options = {});

/// Splits pi into its low-half and high-half subsequences. Total on S_n for
/// even n; throws kOddLength otherwise.
Input decode(const Permutation& pi);

/// Unranks (i1, i2) into (gamma1, gamma2) and encodes.
Permutation message_encode(const BigInt& i1, const BigInt& i2, std::size_t n, Options options = {});

std::pair<BigInt, BigInt> message_decode(const Permutation& pi);

}  // namespace bpc::d1
