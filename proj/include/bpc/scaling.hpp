#pragma once

#include <cstddef>

#include "bpc/rational.hpp"

namespace bpc {

/// ceil(n^eps) for rational eps in (0, 1), computed exactly as the least
/// integer m with m^q >= n^p where eps = p/q.
std::size_t ceil_power(std::size_t n, const Rational& eps);

}  // namespace bpc
