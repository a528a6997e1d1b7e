#include <string>

#include "bpc/analysis.hpp"
#include "bpc/d2_codec.hpp"
#include "bpc/error.hpp"
#include "bpc/tn_codec.hpp"

namespace bpc::analysis {

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string describe(const CodecConfig& config) {
  return std::visit(
      Overloaded{
          [](const D1Config&) { return std::string("d1"); },
          [](const D2Config& c) {
            std::string s = "d2(N=" + std::to_string(c.blocks);
            if (c.epsilon) s += ", epsilon=" + to_string(*c.epsilon);
            return s + ")";
          },
          [](const TnConfig& c) {
            std::string s = "tn(k=" + std::to_string(c.k);
            if (c.epsilon_k) s += ", epsilon_k=" + to_string(*c.epsilon_k);
            return s + ")";
          },
      },
      config);
}

RateReport rate_report(const CodecConfig& config, std::size_t n, EnumerationOptions options) {
  if (n < 2) throw Error(ErrorCode::kParamInvalid, "rate needs n >= 2");
  RateReport report;
  report.n = n;
  report.config = describe(config);
  report.perm_log2 = log2_exact(factorial(n));

  std::visit(Overloaded{
                 [&](const D1Config&) {
                   if (n % 2 != 0) throw Error(ErrorCode::kOddLength, "d1 needs even n");
                   const BigInt half_fact = factorial(n / 2);
                   report.code_size = half_fact * half_fact;
                   report.target = 1.0;
                 },
                 [&](const D2Config& c) {
                   const auto params = d2::Params::make(n, c.blocks, c.epsilon);
                   report.code_size = boost::multiprecision::pow(
                       factorial(params.block_size()), static_cast<unsigned>(params.blocks()));
                   if (c.epsilon) report.target = 1.0 - to_double(*c.epsilon);
                 },
                 [&](const TnConfig& c) {
                   tn::Params::make(n, c.k, c.epsilon_k);
                   if (c.epsilon_k) report.target = (1.0 + to_double(*c.epsilon_k)) / 2.0;
                   if (n <= options.limit && n <= kHardEnumerationLimit) {
                     const auto result = census(n, BalanceSpec::d1(n),
                                                NeighborSpec{static_cast<int>(c.k)}, 0, options);
                     report.code_size = BigInt(result.count);
                   }
                 },
             },
             config);

  if (report.code_size) {
    report.code_log2 = *report.code_size == 1 ? 0.0 : log2_exact(*report.code_size);
    report.rate = *report.code_log2 / report.perm_log2;
  }
  return report;
}

}  // namespace bpc::analysis
