// Serial reference enumerations. Deliberately naive: each permutation of S_n
// goes through the public verifiers, so these stay independent of the
// pruned kernels in census_parallel.cpp.

#include <algorithm>
#include <numeric>
#include <string>

#include "bpc/analysis.hpp"
#include "bpc/error.hpp"
#include "enumeration_guard.hpp"

namespace bpc::analysis {

using detail::check_limit;

CensusResult census_reference(std::size_t n, const BalanceSpec& spec,
                              std::optional<NeighborSpec> neighbor, std::size_t cap,
                              std::size_t limit) {
  check_limit(n, limit);
  if (spec.n() != n) throw Error(ErrorCode::kSpecMismatch, "spec n differs from census n");
  CensusResult result{n, spec, neighbor, 0, {}};
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    const Permutation pi = make_unchecked(v);
    if (!verify_balance(pi, spec).is_valid()) continue;
    if (neighbor && !check_two_neighbor(pi, *neighbor).is_valid()) continue;
    ++result.count;
    if (result.achievers.size() < cap) result.achievers.push_back(pi);
  } while (std::next_permutation(v.begin(), v.end()));
  return result;
}

MinDiscResult min_disc_reference(std::size_t n, std::size_t b, std::size_t limit) {
  check_limit(n, limit);
  detail::check_disc_block(n, b);
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::optional<Rational> best;
  std::uint64_t count = 0;
  do {
    const Rational d = disc(make_unchecked(v), b);
    if (!best || d < *best) {
      best = d;
      count = 1;
    } else if (d == *best) {
      ++count;
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return {*best, count};
}

}  // namespace bpc::analysis
