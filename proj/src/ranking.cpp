#include "bpc/ranking.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "bpc/error.hpp"

namespace bpc {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lehmer digits are accumulated Horner-style in the factorial number
// system, so no factorial table is needed.
BigInt rank(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<bool> used(n + 1, false);
  BigInt r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_unused = 0;
    for (int v = 1; v < pi[i]; ++v) {
      if (!used[v]) ++smaller_unused;
    }
    used[pi[i]] = true;
    r = r * (n - i) + smaller_unused;
  }
  return r;
}

Permutation unrank(const BigInt& index, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kNotPermutation, "zero-length permutation");
  if (index < 0 || index >= factorial(n)) {
    throw Error(ErrorCode::kIndexOutOfRange, "index outside [0, " + std::to_string(n) + "!)");
  }
  std::vector<std::size_t> digits(n);
  BigInt rest = index;
  for (std::size_t radix = 1; radix <= n; ++radix) {
    digits[n - radix] = static_cast<std::size_t>(rest % radix);
    rest /= radix;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return make_unchecked(std::move(out));
}

double log2_exact(const BigInt& value) {
  if (value <= 0) throw Error(ErrorCode::kParamInvalid, "log2 of non-positive value");
  const std::size_t msb = boost::multiprecision::msb(value);
  if (msb < 62) return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
  const std::size_t shift = msb - 62;
  const auto top = static_cast<std::uint64_t>(value >> shift);
  return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

}  // namespace bpc
