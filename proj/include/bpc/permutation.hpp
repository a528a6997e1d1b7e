#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bpc {

/// A bijection on [n] = {1, ..., n}, stored as its one-line notation with
/// 1-based symbols. Construction validates; instances are always valid.
class Permutation {
 public:
  /// Throws Error(kNotPermutation) for empty, duplicate or out-of-range input.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }

  /// Symbol at 0-based offset `i`.
  int operator[](std::size_t i) const { return values_[i]; }

  /// Symbol at 1-based position `pos`; throws kIndexOutOfRange.
  int at(std::size_t pos) const;

  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  std::vector<int> values_;

  friend Permutation make_unchecked(std::vector<int> values);
};

/// Alias of the validating constructor.
Permutation make_permutation(std::vector<int> values);

/// Skips validation. Callers guarantee `values` is a bijection of [n]; used
/// on hot enumeration paths and by encoders whose output is a permutation by
/// construction.
Permutation make_unchecked(std::vector<int> values);

bool is_permutation_of_n(std::span<const int> values);

}  // namespace bpc
