#include "bpc/d1_codec.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bpc/error.hpp"
#include "bpc/text_format.hpp"

namespace bpc::d1 {

namespace {

enum Half { kLow = 0, kHigh = 1 };

// Decision statistic for the next symbol given twice the running deviation.
Half mandated(std::int64_t twice_dev, TieRule tie) {
  if (twice_dev > 0) return kLow;
  if (twice_dev < 0) return kHigh;
  return tie == TieRule::kLowerHalf ? kLow : kHigh;
}

std::string witness(const Input& input, std::int64_t twice_dev, Half half) {
  return "gamma1=[" + format_permutation(input.gamma1) + "] gamma2=[" +
         format_permutation(input.gamma2) + "] deviation=" + to_string(bpc::half(twice_dev)) +
         " mandated=" + (half == kLow ? "low" : "high");
}

std::array<std::vector<int>, 2> sources(const Input& input) {
  const int half_n = static_cast<int>(input.gamma1.size());
  std::array<std::vector<int>, 2> src;
  for (int v : input.gamma1.values()) src[kLow].push_back(v);
  for (int v : input.gamma2.values()) src[kHigh].push_back(v + half_n);
  return src;
}

}  // namespace

Input::Input(Permutation g1, Permutation g2) : gamma1(std::move(g1)), gamma2(std::move(g2)) {
  if (gamma1.size() != gamma2.size()) {
    throw Error(ErrorCode::kParamInvalid, "gamma1 and gamma2 differ in length");
  }
}

Permutation encode(const Input& input, Options options) {
  const std::size_t n = input.n();
  const auto np1 = static_cast<std::int64_t>(n + 1);
  const auto src = sources(input);
  std::array<std::size_t, 2> next{0, 0};
  std::vector<int> out;
  out.reserve(n);
  std::int64_t twice_dev = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    const Half h = step == 1 ? kLow : mandated(twice_dev, options.tie);
    if (next[h] == src[h].size()) throw SourceExhausted(step, witness(input, twice_dev, h));
    const int symbol = src[h][next[h]++];
    out.push_back(symbol);
    twice_dev += 2 * symbol - np1;
  }
  return make_unchecked(std::move(out));
}

StreamingResult encode_streaming(const Input& input, Options options) {
  const std::size_t n = input.n();
  const int half_n = static_cast<int>(n / 2);
  const auto np1 = static_cast<std::int64_t>(n + 1);
  const auto src = sources(input);

  std::vector<int> work;
  work.reserve(n);
  for (std::size_t t = 0; t < n / 2; ++t) {
    work.push_back(src[kLow][t]);
    work.push_back(src[kHigh][t]);
  }
  StreamingResult result{make_unchecked(work), {}, make_unchecked(work), Rational(0)};

  auto half_of = [half_n](int symbol) { return symbol <= half_n ? kLow : kHigh; };
  // First unfixed position at or after `from` holding a symbol of `h`.
  auto seek = [&](Half h, std::size_t from) {
    while (from < n && half_of(work[from]) != h) ++from;
    return from;
  };

  std::array<std::size_t, 2> ptr{0, 1};
  std::int64_t twice_dev = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Half h = j == 0 ? kLow : mandated(twice_dev, options.tie);
    const std::size_t p = ptr[h];
    if (p >= n) throw SourceExhausted(j + 1, witness(input, twice_dev, h));
    if (p != j) {
      // work[j..p-1] all belong to the other half; pull work[p] forward.
      std::rotate(work.begin() + static_cast<std::ptrdiff_t>(j),
                  work.begin() + static_cast<std::ptrdiff_t>(p),
                  work.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      result.trace.push_back({j + 1, work[j]});
      ptr[1 - h] = j + 1;
    }
    ptr[h] = seek(h, p + 1);
    twice_dev += 2 * work[j] - np1;
    if (j == 0) result.initial_deviation = half(twice_dev);
  }
  result.permutation = make_unchecked(std::move(work));
  return result;
}

Input decode(const Permutation& pi) {
  const std::size_t n = pi.size();
  if (n % 2 != 0) throw Error(ErrorCode::kOddLength, "n=" + std::to_string(n) + " is odd");
  const int half_n = static_cast<int>(n / 2);
  std::vector<int> g1, g2;
  g1.reserve(n / 2);
  g2.reserve(n / 2);
  for (int v : pi.values()) {
    if (v <= half_n) {
      g1.push_back(v);
    } else {
      g2.push_back(v - half_n);
    }
  }
  return Input(make_unchecked(std::move(g1)), make_unchecked(std::move(g2)));
}

Permutation message_encode(const BigInt& i1, const BigInt& i2, std::size_t n, Options options) {
  if (n == 0 || n % 2 != 0) throw Error(ErrorCode::kOddLength, "n=" + std::to_string(n) + " is not even");
  return encode(Input(unrank(i1, n / 2), unrank(i2, n / 2)), options);
}

std::pair<BigInt, BigInt> message_decode(const Permutation& pi) {
  const Input in = decode(pi);
  return {rank(in.gamma1), rank(in.gamma2)};
}

}  // namespace bpc::d1
