#include "bpc/scaling.hpp"

#include <string>

#include "bpc/error.hpp"
#include "bpc/ranking.hpp"

namespace bpc {

std::size_t ceil_power(std::size_t n, const Rational& eps) {
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorCode::kParamInvalid, "exponent " + to_string(eps) + " outside (0,1)");
  }
  if (n == 0) throw Error(ErrorCode::kParamInvalid, "n must be positive");
  const auto p = static_cast<unsigned>(eps.numerator());
  const auto q = static_cast<unsigned>(eps.denominator());
  const BigInt target = boost::multiprecision::pow(BigInt(n), p);
  std::size_t lo = 1, hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (boost::multiprecision::pow(BigInt(mid), q) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace bpc
