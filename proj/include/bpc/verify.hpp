#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bpc/permutation.hpp"
#include "bpc/rational.hpp"

namespace bpc {

/// Block-length set S with a per-length bound on |window sum - b(n+1)/2|.
class BalanceSpec {
 public:
  /// `blocks` strictly increasing in [1, n]; `dev_max` parallel to `blocks`,
  /// each entry >= 0. Throws kSpecMismatch otherwise.
  BalanceSpec(std::size_t n, std::vector<int> blocks, std::vector<Rational> dev_max);

  static BalanceSpec uniform(std::size_t n, std::vector<int> blocks, Rational dev_max);

  /// S = [1, n], dev_max = 2(n+1).
  static BalanceSpec d1(std::size_t n);

  /// S = {2, 4, ..., 2(n/N - 1)}, dev_max = 8(n+1)/N. Requires N | n.
  static BalanceSpec d2(std::size_t n, std::size_t blocks_count);

  std::size_t n() const noexcept { return n_; }
  const std::vector<int>& blocks() const noexcept { return blocks_; }
  const std::vector<Rational>& dev_max() const noexcept { return dev_max_; }

  /// floor(2 * dev_max[idx]). A window with doubled deviation D (an integer)
  /// violates the bound iff |D| > doubled_limit(idx).
  std::int64_t doubled_limit(std::size_t idx) const noexcept { return doubled_limit_[idx]; }

 private:
  std::size_t n_;
  std::vector<int> blocks_;
  std::vector<Rational> dev_max_;
  std::vector<std::int64_t> doubled_limit_;
};

struct NeighborSpec {
  int k = 1;
};

struct BalanceViolation {
  int b = 0;
  std::size_t j = 0;  // 1-based window start
  std::int64_t window_sum = 0;
  Rational target;
  Rational allowed;
  Rational actual;

  friend bool operator==(const BalanceViolation&, const BalanceViolation&) = default;
};

struct NeighborViolation {
  std::size_t i = 0;  // 1-based interior position
  int left_gap = 0;
  int right_gap = 0;
  int k = 0;

  friend bool operator==(const NeighborViolation&, const NeighborViolation&) = default;
};

/// Violations sorted by (b, j) for balance and by i for neighbor entries.
struct ViolationReport {
  std::vector<BalanceViolation> entries;
  std::vector<NeighborViolation> neighbor_entries;

  bool is_valid() const noexcept { return entries.empty() && neighbor_entries.empty(); }
};

/// Prefix sums p with p[0] = 0 and p[j] = pi(1) + ... + pi(j).
std::vector<std::int64_t> prefix_sums(const Permutation& pi);

/// pi(j) + ... + pi(j+b-1), 1-based j.
std::int64_t window_sum(const Permutation& pi, std::size_t j, std::size_t b);

/// sum_{l<=j} pi(l) - j(n+1)/2.
Rational prefix_deviation(const Permutation& pi, std::size_t j);

/// max over all windows j in [1, n-b+1] of |window_sum - b(n+1)/2|.
Rational disc(const Permutation& pi, std::size_t b);

ViolationReport verify_balance(const Permutation& pi, const BalanceSpec& spec);

/// Interior positions i in [2, n-1] whose both neighbors differ by more than k.
ViolationReport check_two_neighbor(const Permutation& pi, NeighborSpec spec);

}  // namespace bpc
