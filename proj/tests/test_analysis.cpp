#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"

#include "bpc/analysis.hpp"
#include "bpc/d1_codec.hpp"
#include "bpc/d2_codec.hpp"
#include "bpc/error.hpp"
#include "bpc/sampling.hpp"

using namespace bpc;
using namespace bpc::analysis;

namespace {

const std::vector<int> kExample1 = {3, 12, 4, 11, 1, 10, 2, 9, 8, 5, 7, 6};
const std::vector<int> kExample3 = {2,  25, 8,  32, 3,  26, 7,  29, 4,  28, 6,  30, 1,  27, 5,  31,
                                    11, 17, 16, 22, 10, 20, 13, 23, 12, 19, 14, 21, 9,  18, 15, 24};

double log2_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0); }

}  // namespace

TEST_CASE("census: minimum-discrepancy set for n=4, b=2") {
  const auto spec = BalanceSpec::uniform(4, {2}, Rational(1));
  const auto r = census(4, spec, std::nullopt, 100);
  CHECK(r.count == 8);
  const std::vector<std::vector<int>> listed = {{1, 3, 2, 4}, {1, 4, 2, 3}, {2, 3, 1, 4}, {2, 4, 1, 3},
                                                {3, 1, 4, 2}, {3, 2, 4, 1}, {4, 1, 3, 2}, {4, 2, 3, 1}};
  REQUIRE(r.achievers.size() == listed.size());
  for (std::size_t i = 0; i < listed.size(); ++i) CHECK(r.achievers[i] == make_permutation(listed[i]));
}

TEST_CASE("census: d1 preset at n=4 contains every codeword") {
  const auto r = census(4, BalanceSpec::d1(4), std::nullopt, 1000);
  CHECK(r.count >= 4);
  const std::set<Permutation> found(r.achievers.begin(), r.achievers.end());
  for (const auto& in : sampling::all_d1_inputs(4)) CHECK(found.count(d1::encode(in)) == 1);
}

TEST_CASE("census: d2 preset at n=8 contains every codeword") {
  const auto params = d2::Params::make(8, 4);
  const auto r = census(8, BalanceSpec::d2(8, 4), std::nullopt, 40320);
  const std::set<Permutation> found(r.achievers.begin(), r.achievers.end());
  std::set<Permutation> image;
  for (const auto& in : sampling::all_d2_inputs(params)) image.insert(d2::encode(in));
  CHECK(image.size() == 16);
  for (const auto& pi : image) CHECK(found.count(pi) == 1);
  CHECK(r.count >= image.size());
}

TEST_CASE("census: trivial and limit cases") {
  CHECK(census(1, BalanceSpec::uniform(1, {1}, Rational(0)), std::nullopt, 5).count == 1);
  try {
    census(11, BalanceSpec::d1(11), std::nullopt, 0);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLimitExceeded);
  }
  CHECK_THROWS_AS(census_reference(11, BalanceSpec::d1(11), std::nullopt, 0), Error);
  CHECK_THROWS_AS(census(5, BalanceSpec::d1(4), std::nullopt, 0), Error);
  CHECK(census(11, BalanceSpec::uniform(11, {11}, Rational(0)), std::nullopt, 0, {11, 2}).count == 39916800);
}

TEST_CASE("pruned parallel census matches the serial reference") {
  sampling::Rng rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    std::vector<int> blocks;
    for (std::size_t b = 1; b <= n; ++b) {
      if (rng() % 3 == 0) blocks.push_back(static_cast<int>(b));
    }
    const Rational dev(static_cast<std::int64_t>(rng() % (3 * n)), 1 + static_cast<std::int64_t>(rng() % 2));
    const auto spec = BalanceSpec::uniform(n, blocks, dev);
    std::optional<NeighborSpec> neighbor;
    if (rng() % 2) neighbor = NeighborSpec{1 + static_cast<int>(rng() % (n - 1))};
    const auto ref = census_reference(n, spec, neighbor, 50);
    for (int threads : {0, 3, 8}) {
      const auto got = census(n, spec, neighbor, 50, {10, threads});
      CHECK(got.count == ref.count);
      CHECK(got.achievers == ref.achievers);
    }
  }
}

TEST_CASE("min_disc") {
  CHECK(min_disc(4, 2) == MinDiscResult{Rational(1), 8});
  CHECK(min_disc(2, 2) == MinDiscResult{Rational(0), 2});
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t b = 2; b <= n; ++b) {
      const auto fast = min_disc(n, b, {10, 4});
      CHECK(fast == min_disc_reference(n, b));
      CHECK(fast.value <= 2);
    }
  }
  CHECK_THROWS_AS(min_disc(5, 1), Error);
  CHECK_THROWS_AS(min_disc(5, 6), Error);
}

TEST_CASE("rate reports") {
  const auto d1 = rate_report(D1Config{}, 12);
  CHECK(d1.code_size == BigInt(518400));
  CHECK(*d1.code_log2 == doctest::Approx(2 * std::log2(720.0)).epsilon(1e-12));
  CHECK(*d1.code_log2 == doctest::Approx(18.98).epsilon(1e-3));
  CHECK(d1.perm_log2 == doctest::Approx(log2_factorial(12)).epsilon(1e-12));
  CHECK(d1.perm_log2 == doctest::Approx(28.835).epsilon(1e-4));
  CHECK(*d1.rate == doctest::Approx(0.658).epsilon(1e-3));
  CHECK(*d1.target == 1.0);

  double previous = 0;
  for (std::size_t n : {10, 100, 1000}) {
    const auto r = rate_report(D1Config{}, n);
    CHECK(*r.rate > previous);
    CHECK(*r.code_log2 == doctest::Approx(2 * log2_factorial(n / 2)).epsilon(1e-9));
    previous = *r.rate;
  }

  const auto d2 = rate_report(D2Config{8, Rational(3, 5)}, 32);
  CHECK(*d2.code_log2 == doctest::Approx(8 * std::log2(24.0)).epsilon(1e-12));
  CHECK(*d2.code_log2 == doctest::Approx(36.68).epsilon(1e-3));
  // 36.68 / log2(32!) = 0.3117
  CHECK(*d2.rate == doctest::Approx(8 * std::log2(24.0) / log2_factorial(32)).epsilon(1e-9));
  CHECK(*d2.rate == doctest::Approx(0.3117).epsilon(1e-3));
  CHECK(*d2.target == doctest::Approx(0.4));
  CHECK_THROWS_AS(rate_report(D2Config{6, std::nullopt}, 30), Error);

  const auto tn_small = rate_report(TnConfig{2, Rational(1, 3)}, 8);
  REQUIRE(tn_small.code_size);
  CHECK(*tn_small.code_size == BigInt(census(8, BalanceSpec::d1(8), NeighborSpec{2}, 0).count));
  CHECK(*tn_small.target == doctest::Approx(2.0 / 3.0));
  const auto tn_large = rate_report(TnConfig{4, std::nullopt}, 24);
  CHECK_FALSE(tn_large.code_size);
  CHECK_FALSE(tn_large.rate);
}

TEST_CASE("claim suite on true codewords") {
  std::vector<Permutation> d1_words;
  for (const auto& in : sampling::all_d1_inputs(6)) d1_words.push_back(d1::encode(in));
  REQUIRE(d1_words.size() == 36);
  const auto r1 = claim_suite(d1_words, D1Config{}, 6);
  CHECK(r1.all_passed());
  CHECK(r1.find("prefix_deviation")->checked == 36);
  CHECK(r1.find("window_deviation")->passed == 36);

  const auto r2 = claim_suite({make_permutation(kExample3)}, D2Config{8, std::nullopt}, 32);
  CHECK(r2.all_passed());
  CHECK(r2.bounds.size() == 3);
}

TEST_CASE("claim suite reports corrupted words") {
  // The greedy codeword for identity halves at n=12 with symbols 1 and 12
  // exchanged: prefix sums 12,19,27,36,46 put j=5 at 27/2 > 13.
  const auto base = d1::encode(d1::Input(Permutation::identity(6), Permutation::identity(6)));
  CHECK(base == make_permutation({1, 7, 8, 9, 10, 2, 11, 3, 12, 4, 5, 6}));
  std::vector<int> v(base.values().begin(), base.values().end());
  std::swap(v[0], v[8]);
  const auto r = claim_suite({make_permutation(kExample1), make_permutation(v)}, D1Config{}, 12);
  CHECK_FALSE(r.all_passed());
  const auto* prefix = r.find("prefix_deviation");
  CHECK(prefix->failed == 1);
  REQUIRE(prefix->first_failure);
  CHECK(prefix->first_failure->index == 1);
  CHECK(prefix->first_failure->detail == "j=5 deviation=27/2 bound=13");
  // Windows can never exceed 2(n+1) at n=12.
  CHECK(r.find("window_deviation")->failed == 0);

  std::vector<int> w = kExample3;
  std::swap(w.front(), w.back());
  const auto r2 = claim_suite({make_permutation(w)}, D2Config{8, std::nullopt}, 32);
  const auto* even = r2.find("even_prefix_deviation");
  REQUIRE(even->first_failure);
  CHECK(even->first_failure->detail.rfind("j=2 ", 0) == 0);
}

TEST_CASE("claim suite is independent of worker count") {
  sampling::Rng rng(77);
  const auto params = d2::Params::make(64, 8);
  std::vector<Permutation> words;
  for (int i = 0; i < 400; ++i) {
    auto pi = d2::encode(sampling::random_d2_input(params, rng));
    if (i % 50 == 7) pi = sampling::random_permutation(64, rng);
    words.push_back(pi);
  }
  const auto serial = claim_suite(words, D2Config{8, std::nullopt}, 64, 0);
  const auto parallel = claim_suite(words, D2Config{8, std::nullopt}, 64, 6);
  REQUIRE(serial.bounds.size() == parallel.bounds.size());
  for (std::size_t i = 0; i < serial.bounds.size(); ++i) {
    CHECK(serial.bounds[i].failed == parallel.bounds[i].failed);
    CHECK(serial.bounds[i].first_failure.has_value() == parallel.bounds[i].first_failure.has_value());
    if (serial.bounds[i].first_failure) {
      CHECK(serial.bounds[i].first_failure->index == parallel.bounds[i].first_failure->index);
      CHECK(serial.bounds[i].first_failure->detail == parallel.bounds[i].first_failure->detail);
    }
  }
  CHECK_FALSE(serial.all_passed());
}
