// Serial reference vs pruned parallel enumeration.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>

#include "bpc/analysis.hpp"
#include "bpc/d2_codec.hpp"
#include "bpc/sampling.hpp"

using namespace bpc;

namespace {

void census_reference_d1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis::census_reference(n, BalanceSpec::d1(n), NeighborSpec{2}, 0).count);
  }
}

void census_parallel_d1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis::census(n, BalanceSpec::d1(n), NeighborSpec{2}, 0, {10, threads}).count);
  }
}

void min_disc_reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analysis::min_disc_reference(n, 3).achiever_count);
}

void min_disc_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(analysis::min_disc(n, 3, {10, threads}).achiever_count);
}

void claims_d2(benchmark::State& state) {
  sampling::Rng rng(3);
  const auto params = d2::Params::make(256, 16);
  std::vector<Permutation> words;
  for (int i = 0; i < 2000; ++i) words.push_back(d2::encode(sampling::random_d2_input(params, rng)));
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis::claim_suite(words, analysis::D2Config{16, std::nullopt}, 256, threads));
  }
}

const int kMaxThreads = std::max(4, omp_get_max_threads());

}  // namespace

BENCHMARK(census_reference_d1)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(census_parallel_d1)->ArgsProduct({{8, 9}, {1, kMaxThreads}})->Unit(benchmark::kMillisecond);
BENCHMARK(min_disc_reference)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(min_disc_parallel)->ArgsProduct({{8, 9}, {1, kMaxThreads}})->Unit(benchmark::kMillisecond);
BENCHMARK(claims_d2)->Arg(1)->Arg(kMaxThreads)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
