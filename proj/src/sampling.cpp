#include "bpc/sampling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bpc/error.hpp"

namespace bpc::sampling {

namespace {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(make_unchecked(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Every tuple of `count` permutations of length `len`, first entry slowest.
std::vector<std::vector<Permutation>> all_tuples(std::size_t len, std::size_t count) {
  const auto base = all_permutations(len);
  std::vector<std::vector<Permutation>> out{{}};
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::vector<Permutation>> next;
    next.reserve(out.size() * base.size());
    for (const auto& prefix : out) {
      for (const auto& p : base) {
        next.push_back(prefix);
        next.back().push_back(p);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> mandated_sets(const tn::Params& params, std::int64_t twice_dev,
                                       const std::vector<std::size_t>& used) {
  const std::size_t m = params.sets();
  const bool lower = tn::mandated_half(half(twice_dev)) == tn::Half::kLower;
  std::vector<std::size_t> out;
  for (std::size_t i = lower ? 0 : m / 2; i < (lower ? m / 2 : m); ++i) {
    if (used[i] < params.k()) out.push_back(i);
  }
  return out;
}

}  // namespace

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return make_unchecked(std::move(v));
}

d1::Input random_d1_input(std::size_t n, Rng& rng) {
  return d1::Input(random_permutation(n / 2, rng), random_permutation(n / 2, rng));
}

d2::Input random_d2_input(const d2::Params& params, Rng& rng) {
  std::vector<Permutation> sigmas;
  for (std::size_t i = 0; i < params.blocks(); ++i) sigmas.push_back(random_permutation(params.block_size(), rng));
  return d2::Input(params, std::move(sigmas));
}

tn::Input random_tn_input(const tn::Params& params, Rng& rng) {
  const std::size_t k = params.k();
  const auto np1 = static_cast<std::int64_t>(params.n() + 1);
  std::vector<Permutation> sigmas;
  for (std::size_t i = 0; i < params.sets(); ++i) sigmas.push_back(random_permutation(k, rng));
  std::vector<std::size_t> used(params.sets(), 0);
  std::vector<int> selector;
  std::int64_t twice_dev = 0;
  for (std::size_t t = 0; t < params.n() / 2; ++t) {
    const auto options = mandated_sets(params, twice_dev, used);
    if (options.empty()) throw SourceExhausted(2 * t + 1, "mandated half has no symbols left");
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const std::size_t i = options[pick(rng)];
    for (int rep = 0; rep < 2; ++rep) {
      twice_dev += 2 * (sigmas[i][used[i]++] + static_cast<int>(i * k)) - np1;
    }
    selector.push_back(static_cast<int>(i + 1));
  }
  return tn::Input(params, std::move(sigmas), std::move(selector));
}

std::vector<d1::Input> all_d1_inputs(std::size_t n) {
  const auto base = all_permutations(n / 2);
  std::vector<d1::Input> out;
  out.reserve(base.size() * base.size());
  for (const auto& g1 : base) {
    for (const auto& g2 : base) out.emplace_back(g1, g2);
  }
  return out;
}

std::vector<d2::Input> all_d2_inputs(const d2::Params& params) {
  std::vector<d2::Input> out;
  for (auto& tuple : all_tuples(params.block_size(), params.blocks())) out.emplace_back(params, std::move(tuple));
  return out;
}

std::vector<tn::Input> all_tn_inputs(const tn::Params& params) {
  const std::size_t k = params.k();
  const std::size_t steps = params.n() / 2;
  const auto np1 = static_cast<std::int64_t>(params.n() + 1);
  std::vector<tn::Input> out;
  for (const auto& sigmas : all_tuples(k, params.sets())) {
    std::vector<std::size_t> used(params.sets(), 0);
    std::vector<int> selector;
    std::function<void(std::int64_t)> walk = [&](std::int64_t twice_dev) {
      if (selector.size() == steps) {
        out.emplace_back(params, sigmas, selector);
        return;
      }
      for (std::size_t i : mandated_sets(params, twice_dev, used)) {
        std::int64_t d = twice_dev;
        for (int rep = 0; rep < 2; ++rep) d += 2 * (sigmas[i][used[i]++] + static_cast<int>(i * k)) - np1;
        selector.push_back(static_cast<int>(i + 1));
        walk(d);
        selector.pop_back();
        used[i] -= 2;
      }
    };
    walk(0);
  }
  return out;
}

}  // namespace bpc::sampling
