#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

#include "bpc/permutation.hpp"

namespace bpc {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);

/// Lexicographic rank in S_n; the identity has rank 0.
BigInt rank(const Permutation& pi);

/// Inverse of rank. Throws kIndexOutOfRange unless 0 <= index < n!.
Permutation unrank(const BigInt& index, std::size_t n);

/// log2 of a positive integer, evaluated from its top bits.
double log2_exact(const BigInt& value);

}  // namespace bpc
