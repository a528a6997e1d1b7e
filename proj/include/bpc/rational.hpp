#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace bpc {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, q > 0; integers render as "p/1".
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Value of twice-scaled integer `twice` as a rational (twice / 2).
inline Rational half(std::int64_t twice) { return Rational(twice, 2); }

}  // namespace bpc
