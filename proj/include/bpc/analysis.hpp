#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bpc/permutation.hpp"
#include "bpc/ranking.hpp"
#include "bpc/rational.hpp"
#include "bpc/verify.hpp"

namespace bpc::analysis {

/// Largest n for which S_n is ever enumerated; counts must fit in 64 bits.
inline constexpr std::size_t kHardEnumerationLimit = 20;

struct EnumerationOptions {
  /// Enumeration of S_n is refused above this n (kLimitExceeded).
  std::size_t limit = 10;
  /// 0 or 1 runs sequentially.
  int threads = 0;
};

/// Worker count from BPC_THREADS; 0 when unset or unparsable.
int threads_from_env();

struct CensusResult {
  std::size_t n = 0;
  BalanceSpec spec;
  std::optional<NeighborSpec> neighbor;
  std::uint64_t count = 0;
  /// First `cap` passing permutations in lexicographic order.
  std::vector<Permutation> achievers;
};

/// Exhaustive filter of S_n. Depth-first with pruning on completed windows,
/// parallel over first-symbol classes, merged in class order.
CensusResult census(std::size_t n, const BalanceSpec& spec, std::optional<NeighborSpec> neighbor,
                    std::size_t cap, EnumerationOptions options = {});

/// Serial reference: every permutation from std::next_permutation is passed
/// through verify_balance / check_two_neighbor.
CensusResult census_reference(std::size_t n, const BalanceSpec& spec,
                              std::optional<NeighborSpec> neighbor, std::size_t cap,
                              std::size_t limit = 10);

struct MinDiscResult {
  Rational value;
  std::uint64_t achiever_count = 0;

  friend bool operator==(const MinDiscResult&, const MinDiscResult&) = default;
};

/// min over S_n of disc(pi, b), all windows. Requires 2 <= b <= n.
MinDiscResult min_disc(std::size_t n, std::size_t b, EnumerationOptions options = {});

MinDiscResult min_disc_reference(std::size_t n, std::size_t b, std::size_t limit = 10);

struct D1Config {};
struct D2Config {
  std::size_t blocks = 0;
  std::optional<Rational> epsilon;
};
struct TnConfig {
  std::size_t k = 0;
  std::optional<Rational> epsilon_k;
};
using CodecConfig = std::variant<D1Config, D2Config, TnConfig>;

std::string describe(const CodecConfig& config);

struct RateReport {
  std::size_t n = 0;
  std::string config;
  /// Absent when the code size is not computed (tn beyond the enumeration limit).
  std::optional<BigInt> code_size;
  std::optional<double> code_log2;
  double perm_log2 = 0;
  std::optional<double> rate;
  /// Asymptotic capacity for the configuration, when its exponent is known.
  std::optional<double> target;
};

/// d1: ((n/2)!)^2. d2: ((n/N)!)^N. tn: exhaustive count of S_n under the d1
/// preset and the two-neighbor k-constraint when n is within the limit.
RateReport rate_report(const CodecConfig& config, std::size_t n, EnumerationOptions options = {});

struct Counterexample {
  std::size_t index = 0;  // position in the checked set
  Permutation permutation;
  std::string detail;
};

struct BoundCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<Counterexample> first_failure;
};

struct ClaimReport {
  std::string config;
  std::vector<BoundCheck> bounds;

  bool all_passed() const;
  const BoundCheck* find(const std::string& name) const;
};

/// Batch-checks every bound the codec's construction guarantees (for tn,
/// also reports balance against the d1 preset). Never throws on failures;
/// throws kParamInvalid if a permutation has the wrong length.
ClaimReport claim_suite(const std::vector<Permutation>& perms, const CodecConfig& config,
                        std::size_t n, int threads = 0);

}  // namespace bpc::analysis
