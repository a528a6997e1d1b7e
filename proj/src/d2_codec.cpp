#include "bpc/d2_codec.hpp"

#include <string>

#include "bpc/error.hpp"
#include "bpc/scaling.hpp"
#include "bpc/text_format.hpp"

namespace bpc::d2 {

Params Params::make(std::size_t n, std::size_t blocks, std::optional<Rational> epsilon) {
  if (n == 0 || blocks == 0) throw Error(ErrorCode::kParamInvalid, "n and N must be positive");
  if (n % blocks != 0) {
    throw Error(ErrorCode::kParamInvalid,
                "N=" + std::to_string(blocks) + " does not divide n=" + std::to_string(n));
  }
  if (blocks % 4 != 0) {
    throw Error(ErrorCode::kParamInvalid, "N=" + std::to_string(blocks) + " is not a multiple of 4");
  }
  return Params(n, blocks, epsilon);
}

Params Params::from_epsilon(std::size_t n, const Rational& epsilon) {
  return make(n, ceil_power(n, epsilon), epsilon);
}

std::vector<int> Params::even_block_lengths() const {
  std::vector<int> out;
  for (std::size_t t = 1; t <= s(); ++t) out.push_back(static_cast<int>(2 * t));
  return out;
}

CellSchedule cell_schedule(const Params& params) {
  const std::size_t big_n = params.blocks();
  CellSchedule schedule;
  schedule.visits_per_cell = 2 * params.block_size();
  for (std::size_t c = 1; c <= big_n / 4; ++c) {
    schedule.cells.push_back({c, {2 * c - 1, big_n - 2 * c + 1}, {2 * c, big_n - 2 * c + 2}});
  }
  return schedule;
}

Input::Input(Params p, std::vector<Permutation> s) : params(p), sigmas(std::move(s)) {
  if (sigmas.size() != params.blocks()) {
    throw Error(ErrorCode::kParamInvalid, "expected " + std::to_string(params.blocks()) +
                                              " orderings, got " + std::to_string(sigmas.size()));
  }
  for (const auto& sigma : sigmas) {
    if (sigma.size() != params.block_size()) {
      throw Error(ErrorCode::kParamInvalid,
                  "ordering length " + std::to_string(sigma.size()) + " != n/N");
    }
  }
}

namespace {

std::string witness(const Input& input, const Cell& cell, std::size_t emitted,
                    std::int64_t twice_dev, bool lower, const std::vector<std::size_t>& used) {
  std::string w = "n=" + std::to_string(input.params.n()) + " N=" +
                  std::to_string(input.params.blocks()) + " cell=" + std::to_string(cell.index) +
                  " emitted=" + std::to_string(emitted) + " deviation=" + to_string(half(twice_dev)) +
                  " mandated=" + (lower ? "lower" : "upper") + " consumed=[";
  for (std::size_t i = 0; i < used.size(); ++i) w += (i ? " " : "") + std::to_string(used[i]);
  w += "] sigmas=";
  for (const auto& s : input.sigmas) w += "[" + format_permutation(s) + "]";
  return w;
}

}  // namespace

Permutation encode(const Input& input, Options options) {
  const auto& params = input.params;
  const std::size_t n = params.n();
  const std::size_t block = params.block_size();
  const auto np1 = static_cast<std::int64_t>(n + 1);
  const auto schedule = cell_schedule(params);

  std::vector<std::size_t> used(params.blocks(), 0);
  std::vector<int> out;
  out.reserve(n);
  std::int64_t twice_dev = 0;

  auto take = [&](std::size_t source) {
    const std::size_t i = source - 1;
    const int symbol = input.sigmas[i][used[i]++] + static_cast<int>(i * block);
    out.push_back(symbol);
    twice_dev += 2 * symbol - np1;
  };

  for (const Cell& cell : schedule.cells) {
    for (std::size_t visit = 0; visit < schedule.visits_per_cell; ++visit) {
      bool lower;
      if (out.empty()) {
        lower = true;
      } else if (twice_dev != 0) {
        lower = twice_dev > 0;
      } else {
        lower = options.tie == TieRule::kLowerHalf;
      }
      const auto& pair = lower ? cell.lower : cell.upper;
      // Both sources of a pair are consumed in lockstep.
      if (used[pair[0] - 1] == block) {
        throw SourceExhausted(out.size() + 1,
                              witness(input, cell, out.size(), twice_dev, lower, used));
      }
      take(pair[0]);
      take(pair[1]);
    }
  }
  return make_unchecked(std::move(out));
}

Input decode(const Permutation& pi, const Params& params) {
  if (pi.size() != params.n()) {
    throw Error(ErrorCode::kParamInvalid, "permutation n=" + std::to_string(pi.size()) +
                                              " but params n=" + std::to_string(params.n()));
  }
  const std::size_t block = params.block_size();
  std::vector<std::vector<int>> parts(params.blocks());
  for (int v : pi.values()) {
    const std::size_t i = static_cast<std::size_t>(v - 1) / block;
    parts[i].push_back(v - static_cast<int>(i * block));
  }
  std::vector<Permutation> sigmas;
  sigmas.reserve(parts.size());
  for (auto& part : parts) sigmas.push_back(make_unchecked(std::move(part)));
  return Input(params, std::move(sigmas));
}

}  // namespace bpc::d2
