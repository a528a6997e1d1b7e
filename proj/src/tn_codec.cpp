#include "bpc/tn_codec.hpp"

#include <string>

#include "bpc/scaling.hpp"

namespace bpc::tn {

Params Params::make(std::size_t n, std::size_t k, std::optional<Rational> epsilon_k) {
  if (n == 0 || k == 0) throw Error(ErrorCode::kParamInvalid, "n and k must be positive");
  if (k % 2 != 0) throw Error(ErrorCode::kParamInvalid, "k=" + std::to_string(k) + " is odd");
  if (n % k != 0) {
    throw Error(ErrorCode::kParamInvalid,
                "k=" + std::to_string(k) + " does not divide n=" + std::to_string(n));
  }
  if ((n / k) % 2 != 0) {
    throw Error(ErrorCode::kParamInvalid, "set count n/k=" + std::to_string(n / k) + " is odd");
  }
  return Params(n, k, epsilon_k);
}

Params Params::from_epsilon(std::size_t n, const Rational& epsilon_k) {
  return make(n, ceil_power(n, epsilon_k), epsilon_k);
}

Half mandated_half(const Rational& deviation, TieRule tie) {
  if (deviation > 0) return Half::kLower;
  if (deviation < 0) return Half::kUpper;
  return tie == TieRule::kLowerHalf ? Half::kLower : Half::kUpper;
}

Input::Input(Params p, std::vector<Permutation> s, std::vector<int> sel)
    : params(p), sigmas(std::move(s)), selector(std::move(sel)) {
  const std::size_t m = params.sets();
  if (sigmas.size() != m) {
    throw Error(ErrorCode::kParamInvalid,
                "expected " + std::to_string(m) + " orderings, got " + std::to_string(sigmas.size()));
  }
  for (const auto& sigma : sigmas) {
    if (sigma.size() != params.k()) {
      throw Error(ErrorCode::kParamInvalid, "ordering length " + std::to_string(sigma.size()) + " != k");
    }
  }
  if (selector.size() != params.n() / 2) {
    throw Error(ErrorCode::kParamInvalid, "selector length " + std::to_string(selector.size()) +
                                              " != n/2=" + std::to_string(params.n() / 2));
  }
  for (int idx : selector) {
    if (idx < 1 || static_cast<std::size_t>(idx) > m) {
      throw Error(ErrorCode::kParamInvalid, "selector entry " + std::to_string(idx) + " outside [1,m]");
    }
  }
}

namespace {

std::string describe(std::size_t step, Half mandated, int chosen,
                     const std::vector<std::size_t>& remaining) {
  std::string s = "step " + std::to_string(step) + " selects set " + std::to_string(chosen) +
                  ", mandated half is " + (mandated == Half::kLower ? "lower" : "upper") +
                  "; remaining=[";
  for (std::size_t i = 0; i < remaining.size(); ++i) s += (i ? " " : "") + std::to_string(remaining[i]);
  return s + "]";
}

}  // namespace

SelectorViolation::SelectorViolation(std::size_t step, Half mandated, int chosen,
                                     std::vector<std::size_t> remaining)
    : Error(ErrorCode::kSelectorViolation, describe(step, mandated, chosen, remaining)),
      step_(step),
      mandated_(mandated),
      chosen_(chosen),
      remaining_(std::move(remaining)) {}

Permutation encode(const Input& input, Options options) {
  const auto& params = input.params;
  const std::size_t n = params.n();
  const std::size_t k = params.k();
  const std::size_t m = params.sets();
  const auto np1 = static_cast<std::int64_t>(n + 1);

  std::vector<std::size_t> used(m, 0);
  std::vector<int> out;
  out.reserve(n);
  std::int64_t twice_dev = 0;

  for (std::size_t t = 0; t < input.selector.size(); ++t) {
    const Half h = mandated_half(half(twice_dev), options.tie);
    const int chosen = input.selector[t];
    const std::size_t i = static_cast<std::size_t>(chosen - 1);
    const bool in_lower = i < m / 2;
    if (in_lower != (h == Half::kLower) || used[i] == k) {
      std::vector<std::size_t> remaining(m);
      for (std::size_t s = 0; s < m; ++s) remaining[s] = k - used[s];
      throw SelectorViolation(t + 1, h, chosen, std::move(remaining));
    }
    for (int rep = 0; rep < 2; ++rep) {
      const int symbol = input.sigmas[i][used[i]++] + static_cast<int>(i * k);
      out.push_back(symbol);
      twice_dev += 2 * symbol - np1;
    }
  }
  return make_unchecked(std::move(out));
}

Input decode(const Permutation& pi, const Params& params) {
  if (pi.size() != params.n()) {
    throw Error(ErrorCode::kParamInvalid, "permutation n=" + std::to_string(pi.size()) +
                                              " but params n=" + std::to_string(params.n()));
  }
  const std::size_t k = params.k();
  std::vector<std::vector<int>> parts(params.sets());
  std::vector<int> selector;
  selector.reserve(pi.size() / 2);
  for (std::size_t t = 0; t + 1 < pi.size(); t += 2) {
    const std::size_t a = static_cast<std::size_t>(pi[t] - 1) / k;
    const std::size_t b = static_cast<std::size_t>(pi[t + 1] - 1) / k;
    if (a != b) {
      throw Error(ErrorCode::kNotCodeword, "pair " + std::to_string(t / 2 + 1) + " (" +
                                               std::to_string(pi[t]) + "," + std::to_string(pi[t + 1]) +
                                               ") straddles two sets");
    }
    selector.push_back(static_cast<int>(a + 1));
    parts[a].push_back(pi[t] - static_cast<int>(a * k));
    parts[a].push_back(pi[t + 1] - static_cast<int>(a * k));
  }
  std::vector<Permutation> sigmas;
  sigmas.reserve(parts.size());
  for (auto& part : parts) sigmas.push_back(make_unchecked(std::move(part)));
  return Input(params, std::move(sigmas), std::move(selector));
}

}  // namespace bpc::tn
