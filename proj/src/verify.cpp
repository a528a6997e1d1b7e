#include "bpc/verify.hpp"

#include <cstdlib>
#include <string>

#include "bpc/error.hpp"

namespace bpc {

namespace {

std::int64_t doubled_dev(std::int64_t sum, std::int64_t b, std::int64_t n) {
  return 2 * sum - b * (n + 1);
}

}  // namespace

BalanceSpec::BalanceSpec(std::size_t n, std::vector<int> blocks, std::vector<Rational> dev_max)
    : n_(n), blocks_(std::move(blocks)), dev_max_(std::move(dev_max)) {
  if (n_ == 0) throw Error(ErrorCode::kSpecMismatch, "n must be positive");
  if (blocks_.size() != dev_max_.size()) {
    throw Error(ErrorCode::kSpecMismatch, "blocks and dev_max differ in length");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const int b = blocks_[i];
    if (b < 1 || static_cast<std::size_t>(b) > n_) {
      throw Error(ErrorCode::kSpecMismatch, "block length " + std::to_string(b) + " outside [1,n]");
    }
    if (i > 0 && blocks_[i - 1] >= b) {
      throw Error(ErrorCode::kSpecMismatch, "block lengths must be strictly increasing");
    }
    if (dev_max_[i] < 0) throw Error(ErrorCode::kSpecMismatch, "dev_max must be non-negative");
    doubled_limit_.push_back(2 * dev_max_[i].numerator() / dev_max_[i].denominator());
  }
}

BalanceSpec BalanceSpec::uniform(std::size_t n, std::vector<int> blocks, Rational dev_max) {
  std::vector<Rational> devs(blocks.size(), dev_max);
  return BalanceSpec(n, std::move(blocks), std::move(devs));
}

BalanceSpec BalanceSpec::d1(std::size_t n) {
  std::vector<int> blocks(n);
  for (std::size_t b = 1; b <= n; ++b) blocks[b - 1] = static_cast<int>(b);
  return uniform(n, std::move(blocks), Rational(2 * static_cast<std::int64_t>(n + 1)));
}

BalanceSpec BalanceSpec::d2(std::size_t n, std::size_t blocks_count) {
  if (blocks_count == 0 || n % blocks_count != 0) {
    throw Error(ErrorCode::kSpecMismatch,
                "N=" + std::to_string(blocks_count) + " does not divide n=" + std::to_string(n));
  }
  const std::size_t s = n / blocks_count - 1;
  std::vector<int> blocks;
  for (std::size_t t = 1; t <= s; ++t) blocks.push_back(static_cast<int>(2 * t));
  const Rational dev(8 * static_cast<std::int64_t>(n + 1), static_cast<std::int64_t>(blocks_count));
  return uniform(n, std::move(blocks), dev);
}

std::vector<std::int64_t> prefix_sums(const Permutation& pi) {
  std::vector<std::int64_t> p(pi.size() + 1, 0);
  for (std::size_t i = 0; i < pi.size(); ++i) p[i + 1] = p[i] + pi[i];
  return p;
}

std::int64_t window_sum(const Permutation& pi, std::size_t j, std::size_t b) {
  const std::size_t n = pi.size();
  if (b < 1 || b > n || j < 1 || j > n - b + 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "window (j=" + std::to_string(j) + ", b=" + std::to_string(b) + ") outside n=" +
                    std::to_string(n));
  }
  std::int64_t sum = 0;
  for (std::size_t l = j - 1; l < j - 1 + b; ++l) sum += pi[l];
  return sum;
}

Rational prefix_deviation(const Permutation& pi, std::size_t j) {
  const std::size_t n = pi.size();
  if (j < 1 || j > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "prefix length " + std::to_string(j) + " outside [1,n]");
  }
  std::int64_t sum = 0;
  for (std::size_t l = 0; l < j; ++l) sum += pi[l];
  return half(doubled_dev(sum, static_cast<std::int64_t>(j), static_cast<std::int64_t>(n)));
}

Rational disc(const Permutation& pi, std::size_t b) {
  const std::size_t n = pi.size();
  if (b < 1 || b > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "block length " + std::to_string(b) + " outside [1,n]");
  }
  const auto p = prefix_sums(pi);
  std::int64_t worst = 0;
  for (std::size_t j = 1; j + b - 1 <= n; ++j) {
    const auto d = std::llabs(doubled_dev(p[j + b - 1] - p[j - 1], static_cast<std::int64_t>(b),
                                          static_cast<std::int64_t>(n)));
    if (d > worst) worst = d;
  }
  return half(worst);
}

ViolationReport verify_balance(const Permutation& pi, const BalanceSpec& spec) {
  const std::size_t n = pi.size();
  if (spec.n() != n) {
    throw Error(ErrorCode::kSpecMismatch, "spec n=" + std::to_string(spec.n()) +
                                              " but permutation n=" + std::to_string(n));
  }
  const auto p = prefix_sums(pi);
  const auto nn = static_cast<std::int64_t>(n);
  ViolationReport report;
  for (std::size_t idx = 0; idx < spec.blocks().size(); ++idx) {
    const auto b = static_cast<std::size_t>(spec.blocks()[idx]);
    const auto bb = static_cast<std::int64_t>(b);
    const auto limit = spec.doubled_limit(idx);
    for (std::size_t j = 1; j + b - 1 <= n; ++j) {
      const auto sum = p[j + b - 1] - p[j - 1];
      const auto d = std::llabs(doubled_dev(sum, bb, nn));
      if (d > limit) {
        report.entries.push_back({static_cast<int>(b), j, sum, half(bb * (nn + 1)),
                                  spec.dev_max()[idx], half(d)});
      }
    }
  }
  return report;
}

ViolationReport check_two_neighbor(const Permutation& pi, NeighborSpec spec) {
  const std::size_t n = pi.size();
  if (n < 3) throw Error(ErrorCode::kSpecMismatch, "two-neighbor check needs n >= 3");
  if (spec.k < 1 || static_cast<std::size_t>(spec.k) > n - 1) {
    throw Error(ErrorCode::kSpecMismatch, "k=" + std::to_string(spec.k) + " outside [1,n-1]");
  }
  ViolationReport report;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const int left = std::abs(pi[i] - pi[i - 1]);
    const int right = std::abs(pi[i] - pi[i + 1]);
    if (left > spec.k && right > spec.k) report.neighbor_entries.push_back({i + 1, left, right, spec.k});
  }
  return report;
}

}  // namespace bpc
