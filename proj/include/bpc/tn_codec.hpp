#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bpc/error.hpp"
#include "bpc/permutation.hpp"
#include "bpc/rational.hpp"
#include "bpc/tie_rule.hpp"

namespace bpc::tn {

/// [n] is split into m = n/k sets of k consecutive symbols; sets 1..m/2 form
/// the lower half, m/2+1..m the upper half. Requires k even, k | n, m even.
class Params {
 public:
  static Params make(std::size_t n, std::size_t k, std::optional<Rational> epsilon_k = {});

  /// k = ceil(n^eps_k), then validated like `make`.
  static Params from_epsilon(std::size_t n, const Rational& epsilon_k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t sets() const noexcept { return n_ / k_; }
  const std::optional<Rational>& epsilon_k() const noexcept { return epsilon_k_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(std::size_t n, std::size_t k, std::optional<Rational> e) : n_(n), k_(k), epsilon_k_(e) {}

  std::size_t n_;
  std::size_t k_;
  std::optional<Rational> epsilon_k_;
};

enum class Half { kLower, kUpper };

/// Lower on surplus or tie, upper on deficit.
Half mandated_half(const Rational& deviation, TieRule tie = TieRule::kLowerHalf);

struct Input {
  Params params;
  /// sigmas[i-1] orders set i; entries are offsets in [1, k].
  std::vector<Permutation> sigmas;
  /// One 1-based set index per pair step, n/2 entries.
  std::vector<int> selector;

  /// Throws kParamInvalid on shape mismatch or out-of-range selector entries.
  Input(Params p, std::vector<Permutation> s, std::vector<int> sel);

  friend bool operator==(const Input&, const Input&) = default;
};

/// Raised when the selector names a set outside the mandated half or one
/// that is already exhausted.
class SelectorViolation : public Error {
 public:
  SelectorViolation(std::size_t step, Half mandated, int chosen, std::vector<std::size_t> remaining);

  std::size_t step() const noexcept { return step_; }
  Half mandated() const noexcept { return mandated_; }
  int chosen() const noexcept { return chosen_; }
  /// Symbols left in each set before this step.
  const std::vector<std::size_t>& remaining() const noexcept { return remaining_; }

 private:
  std::size_t step_;
  Half mandated_;
  int chosen_;
  std::vector<std::size_t> remaining_;
};

struct Options {
  TieRule tie = TieRule::kLowerHalf;
};

/// At pair step t, appends the next two symbols of set selector[t] after
/// checking it lies in the half mandated by the current prefix deviation.
Permutation encode(const Input& input, Options options = {});

/// Throws kNotCodeword if some pair (pi(2t-1), pi(2t)) straddles two sets.
Input decode(const Permutation& pi, const Params& params);

}  // namespace bpc::tn
