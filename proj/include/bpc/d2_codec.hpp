#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "bpc/permutation.hpp"
#include "bpc/rational.hpp"
#include "bpc/tie_rule.hpp"

namespace bpc::d2 {

/// Code shape: [n] is split into N equal blocks of consecutive symbols.
/// Requires N | n and 4 | N.
class Params {
 public:
  /// Throws kParamInvalid on divisibility failure.
  static Params make(std::size_t n, std::size_t blocks, std::optional<Rational> epsilon = {});

  /// N = ceil(n^eps), then validated like `make`. Never rounds to a legal N.
  static Params from_epsilon(std::size_t n, const Rational& epsilon);

  std::size_t n() const noexcept { return n_; }
  std::size_t blocks() const noexcept { return blocks_; }
  std::size_t block_size() const noexcept { return n_ / blocks_; }
  const std::optional<Rational>& epsilon() const noexcept { return epsilon_; }

  /// s = n/N - 1.
  std::size_t s() const noexcept { return block_size() - 1; }

  /// {2, 4, ..., 2s}.
  std::vector<int> even_block_lengths() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(std::size_t n, std::size_t blocks, std::optional<Rational> epsilon)
      : n_(n), blocks_(blocks), epsilon_(epsilon) {}

  std::size_t n_;
  std::size_t blocks_;
  std::optional<Rational> epsilon_;
};

/// One encoding stage. Source indices are 1-based block numbers. The lower
/// pair's two blocks sit below the mean, the upper pair's above it.
struct Cell {
  std::size_t index = 0;
  std::array<std::size_t, 2> lower{};
  std::array<std::size_t, 2> upper{};
};

struct CellSchedule {
  std::vector<Cell> cells;
  std::size_t visits_per_cell = 0;
};

CellSchedule cell_schedule(const Params& params);

struct Input {
  Params params;
  /// sigmas[i-1] orders block i; entries are offsets in [1, n/N].
  std::vector<Permutation> sigmas;

  /// Throws kParamInvalid unless there are N orderings of length n/N.
  Input(Params p, std::vector<Permutation> s);

  friend bool operator==(const Input&, const Input&) = default;
};

struct Options {
  /// Pair drawn when the even-prefix deviation is exactly zero.
  TieRule tie = TieRule::kLowerHalf;
};

/// Appends two symbols per visit, cell by cell. Throws SourceExhausted with
/// the full state if a mandated pair is empty before its cell completes.
Permutation encode(const Input& input, Options options = {});

/// Projects pi onto each block. Total on S_n.
Input decode(const Permutation& pi, const Params& params);

}  // namespace bpc::d2
