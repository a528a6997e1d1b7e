#include <cstdlib>
#include <limits>
#include <string>

#include <omp.h>

#include "bpc/analysis.hpp"
#include "bpc/error.hpp"
#include "enumeration_guard.hpp"

namespace bpc::analysis {

int threads_from_env() {
  const char* raw = std::getenv("BPC_THREADS");
  if (raw == nullptr) return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 0) return 0;
  return static_cast<int>(v);
}

namespace {

// Symbols are placed left to right, smallest unused first, so leaves are
// visited in lexicographic order. A branch is abandoned as soon as a window
// ending at the newest position breaks its bound.
class CensusWalker {
 public:
  CensusWalker(const BalanceSpec& spec, int k, std::size_t cap)
      : n_(spec.n()), np1_(static_cast<std::int64_t>(spec.n() + 1)), k_(k), cap_(cap) {
    for (std::size_t i = 0; i < spec.blocks().size(); ++i) {
      blocks_.push_back(spec.blocks()[i]);
      limits_.push_back(spec.doubled_limit(i));
    }
    perm_.assign(n_, 0);
    prefix_.assign(n_ + 1, 0);
    used_.assign(n_ + 1, false);
  }

  void run_class(int first) {
    if (place(0, first)) descend(1);
  }

  std::uint64_t count = 0;
  std::vector<Permutation> achievers;

 private:
  bool place(std::size_t pos, int v) {
    perm_[pos] = v;
    prefix_[pos + 1] = prefix_[pos] + v;
    const std::size_t len = pos + 1;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const auto b = static_cast<std::size_t>(blocks_[i]);
      if (b > len) break;
      const std::int64_t d = 2 * (prefix_[len] - prefix_[len - b]) - static_cast<std::int64_t>(b) * np1_;
      if (std::llabs(d) > limits_[i]) return false;
    }
    if (k_ > 0 && len >= 3) {
      const int mid = perm_[len - 2];
      if (std::abs(mid - perm_[len - 3]) > k_ && std::abs(mid - perm_[len - 1]) > k_) return false;
    }
    used_[v] = true;
    return true;
  }

  void descend(std::size_t pos) {
    if (pos == n_) {
      ++count;
      if (achievers.size() < cap_) achievers.push_back(make_unchecked(perm_));
      used_[perm_[pos - 1]] = false;
      return;
    }
    for (int v = 1; v <= static_cast<int>(n_); ++v) {
      if (used_[v]) continue;
      if (place(pos, v)) descend(pos + 1);
    }
    used_[perm_[pos - 1]] = false;
  }

  std::size_t n_;
  std::int64_t np1_;
  int k_;
  std::size_t cap_;
  std::vector<int> blocks_;
  std::vector<std::int64_t> limits_;
  std::vector<int> perm_;
  std::vector<std::int64_t> prefix_;
  std::vector<bool> used_;
};

// Same traversal for a single block length, tracking the running maximum of
// the doubled window deviation. Branches strictly worse than the best leaf
// of this class are cut, so the class minimum and its count stay exact.
class MinDiscWalker {
 public:
  MinDiscWalker(std::size_t n, std::size_t b)
      : n_(n), b_(b), target_(static_cast<std::int64_t>(b * (n + 1))) {
    perm_.assign(n_, 0);
    prefix_.assign(n_ + 1, 0);
    used_.assign(n_ + 1, false);
  }

  void run_class(int first) { step(0, first, 0); }

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint64_t count = 0;

 private:
  void step(std::size_t pos, int v, std::int64_t worst) {
    perm_[pos] = v;
    prefix_[pos + 1] = prefix_[pos] + v;
    const std::size_t len = pos + 1;
    if (len >= b_) {
      const std::int64_t d = std::llabs(2 * (prefix_[len] - prefix_[len - b_]) - target_);
      if (d > worst) worst = d;
      if (worst > best) return;
    }
    if (len == n_) {
      if (worst < best) {
        best = worst;
        count = 1;
      } else {
        ++count;
      }
      return;
    }
    used_[v] = true;
    for (int w = 1; w <= static_cast<int>(n_); ++w) {
      if (!used_[w]) step(pos + 1, w, worst);
    }
    used_[v] = false;
  }

  std::size_t n_;
  std::size_t b_;
  std::int64_t target_;
  std::vector<int> perm_;
  std::vector<std::int64_t> prefix_;
  std::vector<bool> used_;
};

}  // namespace

CensusResult census(std::size_t n, const BalanceSpec& spec, std::optional<NeighborSpec> neighbor,
                    std::size_t cap, EnumerationOptions options) {
  detail::check_limit(n, options.limit);
  if (spec.n() != n) throw Error(ErrorCode::kSpecMismatch, "spec n differs from census n");
  int k = 0;
  if (neighbor) {
    if (n < 3) throw Error(ErrorCode::kSpecMismatch, "two-neighbor check needs n >= 3");
    if (neighbor->k < 1 || static_cast<std::size_t>(neighbor->k) > n - 1) {
      throw Error(ErrorCode::kSpecMismatch, "k=" + std::to_string(neighbor->k) + " outside [1,n-1]");
    }
    k = neighbor->k;
  }

  const int classes = static_cast<int>(n);
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::vector<Permutation>> found(n);
  const int threads = options.threads > 1 ? options.threads : 1;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (int f = 0; f < classes; ++f) {
    CensusWalker walker(spec, k, cap);
    walker.run_class(f + 1);
    counts[f] = walker.count;
    found[f] = std::move(walker.achievers);
  }

  CensusResult result{n, spec, neighbor, 0, {}};
  for (std::size_t f = 0; f < n; ++f) {
    result.count += counts[f];
    for (auto& pi : found[f]) {
      if (result.achievers.size() == cap) break;
      result.achievers.push_back(std::move(pi));
    }
  }
  return result;
}

MinDiscResult min_disc(std::size_t n, std::size_t b, EnumerationOptions options) {
  detail::check_limit(n, options.limit);
  detail::check_disc_block(n, b);

  const int classes = static_cast<int>(n);
  std::vector<std::int64_t> bests(n);
  std::vector<std::uint64_t> counts(n);
  const int threads = options.threads > 1 ? options.threads : 1;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (int f = 0; f < classes; ++f) {
    MinDiscWalker walker(n, b);
    walker.run_class(f + 1);
    bests[f] = walker.best;
    counts[f] = walker.count;
  }

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint64_t count = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (bests[f] < best) {
      best = bests[f];
      count = counts[f];
    } else if (bests[f] == best) {
      count += counts[f];
    }
  }
  return {half(best), count};
}

}  // namespace bpc::analysis
