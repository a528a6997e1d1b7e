#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "bpc/analysis.hpp"
#include "bpc/d2_codec.hpp"
#include "bpc/error.hpp"
#include "bpc/tn_codec.hpp"

namespace bpc::analysis {

namespace {

// A bound check returns an empty string on pass, else a description of the
// first failing location.
using Check = std::function<std::string(const Permutation&, const std::vector<std::int64_t>&)>;

struct NamedCheck {
  std::string name;
  Check check;
};

std::string window_failure(const Permutation& pi, const std::vector<std::int64_t>& p,
                           const std::vector<int>& blocks, std::int64_t doubled_bound,
                           const std::string& bound_text) {
  const auto n = static_cast<std::int64_t>(pi.size());
  for (int b : blocks) {
    for (std::int64_t j = 1; j + b - 1 <= n; ++j) {
      const std::int64_t d = 2 * (p[j + b - 1] - p[j - 1]) - b * (n + 1);
      if (std::llabs(d) > doubled_bound) {
        return "b=" + std::to_string(b) + " j=" + std::to_string(j) + " deviation=" +
               to_string(half(d)) + " bound=" + bound_text;
      }
    }
  }
  return {};
}

std::string prefix_failure(const Permutation& pi, const std::vector<std::int64_t>& p,
                           std::size_t stride, std::int64_t doubled_bound,
                           const std::string& bound_text) {
  const auto n = static_cast<std::int64_t>(pi.size());
  for (std::int64_t j = static_cast<std::int64_t>(stride); j <= n; j += static_cast<std::int64_t>(stride)) {
    const std::int64_t d = 2 * p[j] - j * (n + 1);
    if (std::llabs(d) > doubled_bound) {
      return "j=" + std::to_string(j) + " deviation=" + to_string(half(d)) + " bound=" + bound_text;
    }
  }
  return {};
}

std::vector<int> range_blocks(int lo, int hi) {
  std::vector<int> out;
  for (int b = lo; b <= hi; ++b) out.push_back(b);
  return out;
}

std::vector<NamedCheck> d1_checks(std::size_t n) {
  const auto np1 = static_cast<std::int64_t>(n + 1);
  const auto blocks = range_blocks(2, static_cast<int>(n));
  return {
      {"prefix_deviation",
       [=](const Permutation& pi, const auto& p) {
         return prefix_failure(pi, p, 1, 2 * np1, std::to_string(np1));
       }},
      {"window_deviation",
       [=](const Permutation& pi, const auto& p) {
         return window_failure(pi, p, blocks, 4 * np1, std::to_string(2 * np1));
       }},
  };
}

std::vector<NamedCheck> d2_checks(std::size_t n, std::size_t big_n) {
  const auto params = d2::Params::make(n, big_n);
  const auto nn = static_cast<std::int64_t>(n);
  const auto bn = static_cast<std::int64_t>(big_n);
  const auto blocks = params.even_block_lengths();
  // Bounds 2n/N and 4n/N are integers since N | n; 8(n+1)/N may not be.
  const std::int64_t prefix_bound = 2 * nn / bn;
  const std::int64_t cell_len = 4 * nn / bn;
  const Rational window_bound(8 * (nn + 1), bn);
  const std::int64_t window_doubled = 2 * window_bound.numerator() / window_bound.denominator();
  return {
      {"even_prefix_deviation",
       [=](const Permutation& pi, const auto& p) {
         return prefix_failure(pi, p, 2, 2 * prefix_bound, std::to_string(prefix_bound));
       }},
      {"pair_locality",
       [=](const Permutation& pi, const auto&) -> std::string {
         for (int b : blocks) {
           for (std::int64_t i = 1; i + b <= nn; ++i) {
             const std::int64_t j = i + b - 1;
             const std::int64_t cell = (i + cell_len - 1) / cell_len;
             if (!((cell - 1) * cell_len < i && i < j && j <= (cell + 1) * cell_len)) {
               return "b=" + std::to_string(b) + " i=" + std::to_string(i) + " leaves cells " +
                      std::to_string(cell) + ".." + std::to_string(cell + 1);
             }
             const int gap = std::abs(pi[static_cast<std::size_t>(j)] - pi[static_cast<std::size_t>(i - 1)]);
             if (gap > cell_len) {
               return "b=" + std::to_string(b) + " i=" + std::to_string(i) + " |pi(j+1)-pi(i)|=" +
                      std::to_string(gap) + " bound=" + std::to_string(cell_len);
             }
           }
         }
         return {};
       }},
      {"window_deviation",
       [=](const Permutation& pi, const auto& p) {
         return window_failure(pi, p, blocks, window_doubled, to_string(window_bound));
       }},
  };
}

std::vector<NamedCheck> tn_checks(std::size_t n, std::size_t k) {
  tn::Params::make(n, k);
  const BalanceSpec d1_spec = BalanceSpec::d1(n);
  const auto ki = static_cast<int>(k);
  std::vector<NamedCheck> checks;
  checks.push_back({"pair_within_set", [=](const Permutation& pi, const auto&) -> std::string {
                      for (std::size_t t = 0; t + 1 < pi.size(); t += 2) {
                        if ((pi[t] - 1) / ki != (pi[t + 1] - 1) / ki) {
                          return "pair " + std::to_string(t / 2 + 1) + " straddles two sets";
                        }
                      }
                      return {};
                    }});
  for (int bound : {ki, ki - 1}) {
    if (bound < 1) continue;
    checks.push_back({"two_neighbor_k" + std::string(bound == ki ? "" : "_minus_1"),
                      [=](const Permutation& pi, const auto&) -> std::string {
                        const auto r = check_two_neighbor(pi, NeighborSpec{bound});
                        if (r.is_valid()) return {};
                        const auto& e = r.neighbor_entries.front();
                        return "i=" + std::to_string(e.i) + " gaps=" + std::to_string(e.left_gap) +
                               "," + std::to_string(e.right_gap) + " bound=" + std::to_string(bound);
                      }});
  }
  checks.push_back({"d1_balance", [=](const Permutation& pi, const auto&) -> std::string {
                      const auto r = verify_balance(pi, d1_spec);
                      if (r.is_valid()) return {};
                      const auto& e = r.entries.front();
                      return "b=" + std::to_string(e.b) + " j=" + std::to_string(e.j) +
                             " deviation=" + to_string(e.actual) + " bound=" + to_string(e.allowed);
                    }});
  return checks;
}

}  // namespace

bool ClaimReport::all_passed() const {
  for (const auto& b : bounds) {
    if (b.failed != 0) return false;
  }
  return true;
}

const BoundCheck* ClaimReport::find(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

ClaimReport claim_suite(const std::vector<Permutation>& perms, const CodecConfig& config,
                        std::size_t n, int threads) {
  std::vector<NamedCheck> checks;
  if (std::holds_alternative<D1Config>(config)) {
    if (n % 2 != 0) throw Error(ErrorCode::kOddLength, "d1 needs even n");
    checks = d1_checks(n);
  } else if (const auto* c2 = std::get_if<D2Config>(&config)) {
    checks = d2_checks(n, c2->blocks);
  } else {
    checks = tn_checks(n, std::get<TnConfig>(config).k);
  }
  for (const auto& pi : perms) {
    if (pi.size() != n) {
      throw Error(ErrorCode::kParamInvalid, "permutation of length " + std::to_string(pi.size()) +
                                                " in a suite for n=" + std::to_string(n));
    }
  }

  // failures[c][i] holds the message for permutation i under check c.
  const std::size_t count = perms.size();
  std::vector<std::vector<std::string>> failures(checks.size(), std::vector<std::string>(count));
  const int workers = threads > 1 ? threads : 1;
  const auto total = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(static) num_threads(workers) if (workers > 1)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto& pi = perms[static_cast<std::size_t>(i)];
    const auto p = prefix_sums(pi);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      failures[c][static_cast<std::size_t>(i)] = checks[c].check(pi, p);
    }
  }

  ClaimReport report;
  report.config = describe(config);
  for (std::size_t c = 0; c < checks.size(); ++c) {
    BoundCheck bound;
    bound.name = checks[c].name;
    bound.checked = count;
    for (std::size_t i = 0; i < count; ++i) {
      if (failures[c][i].empty()) continue;
      ++bound.failed;
      if (!bound.first_failure) bound.first_failure = Counterexample{i, perms[i], failures[c][i]};
    }
    bound.passed = bound.checked - bound.failed;
    report.bounds.push_back(std::move(bound));
  }
  return report;
}

}  // namespace bpc::analysis
