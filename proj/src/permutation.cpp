#include "bpc/permutation.hpp"

#include <numeric>
#include <string>

#include "bpc/error.hpp"

namespace bpc {

bool is_permutation_of_n(std::span<const int> values) {
  const auto n = values.size();
  if (n == 0) return false;
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_permutation_of_n(values_)) {
    throw Error(ErrorCode::kNotPermutation,
                "values are not a bijection of [" + std::to_string(values_.size()) + "]");
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kNotPermutation, "zero-length permutation");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

int Permutation::at(std::size_t pos) const {
  if (pos < 1 || pos > values_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "position " + std::to_string(pos) + " outside [1," +
                    std::to_string(values_.size()) + "]");
  }
  return values_[pos - 1];
}

Permutation make_permutation(std::vector<int> values) { return Permutation(std::move(values)); }

Permutation make_unchecked(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::Unchecked{});
}

}  // namespace bpc
