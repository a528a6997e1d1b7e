#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bpc/permutation.hpp"

namespace bpc {

// Text format: 1-based integers separated by single spaces or commas, one
// permutation per line, no leading or trailing separators.

/// Parses integers only; does not check bijectivity.
std::vector<int> parse_int_list(std::string_view text);

Permutation parse_permutation(std::string_view text);

/// Space-separated, no trailing newline.
std::string format_permutation(const Permutation& pi);
std::string format_int_list(const std::vector<int>& values);

/// One permutation per non-empty line.
std::vector<Permutation> read_permutations(std::istream& in);

}  // namespace bpc
