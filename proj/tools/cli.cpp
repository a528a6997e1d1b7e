#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bpc/analysis.hpp"
#include "bpc/d1_codec.hpp"
#include "bpc/d2_codec.hpp"
#include "bpc/error.hpp"
#include "bpc/json_io.hpp"
#include "bpc/text_format.hpp"
#include "bpc/tn_codec.hpp"
#include "bpc/verify.hpp"

namespace bpc::cli {

namespace {

using json::Json;

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kParamInvalid, "not a rational number: '" + text + "'");
  };
  if (text.empty()) return fail();
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      std::size_t used_p = 0, used_q = 0;
      const std::string p = text.substr(0, slash), q = text.substr(slash + 1);
      const long long num = std::stoll(p, &used_p);
      const long long den = std::stoll(q, &used_q);
      if (used_p != p.size() || used_q != q.size() || den == 0) return fail();
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    const std::string whole = text.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (frac.size() > 15 || !std::all_of(frac.begin(), frac.end(), ::isdigit)) return fail();
    std::size_t used = 0;
    const long long w = whole.empty() ? 0 : std::stoll(whole, &used);
    if (used != whole.size()) return fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    const bool negative = !whole.empty() && whole[0] == '-';
    return Rational(w * scale + (negative ? -f : f), scale);
  } catch (const std::logic_error&) {
    return fail();
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(std::istream& in) {
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kParamInvalid, "cannot open '" + path + "'");
  return read_all(file);
}

Permutation perm_arg(const std::string& text, std::istream& in) {
  return parse_permutation(text == "-" ? first_line(in) : text);
}

int report_exit(const ViolationReport& report) { return report.is_valid() ? kOk : kViolation; }

struct Options {
  // shared
  std::string perm;
  std::string input;
  std::size_t n = 0;
  std::size_t blocks = 0;
  std::size_t k = 0;
  std::size_t b = 0;
  int threads = -1;
  std::size_t limit = 10;
  // encode d1
  std::string gamma1, gamma2, i1, i2;
  bool streaming = false;
  bool trace = false;
  bool index = false;
  // verify / census
  std::string preset;
  std::vector<int> block_list;
  std::string dev;
  std::size_t cap = 100;
  // rate / claims
  std::string codec;
  std::vector<std::size_t> n_list;
  std::string epsilon;
  std::string epsilon_k;
  std::string format = "json";
};

int threads_of(const Options& o) { return o.threads >= 0 ? o.threads : analysis::threads_from_env(); }

int cmd_encode_d1(const Options& o, CLI::App& cmd, std::ostream& out) {
  const bool by_gamma = cmd.count("--gamma1") + cmd.count("--gamma2") > 0;
  const bool by_index = cmd.count("--i1") + cmd.count("--i2") > 0;
  if (by_gamma == by_index) {
    throw Error(ErrorCode::kParamInvalid, "give either --gamma1/--gamma2 or --i1/--i2");
  }
  if (o.n == 0 || o.n % 2 != 0) throw Error(ErrorCode::kOddLength, "--n must be even and positive");
  if (by_index) {
    if (cmd.count("--i1") == 0 || cmd.count("--i2") == 0) {
      throw Error(ErrorCode::kParamInvalid, "--i1 and --i2 go together");
    }
    if (o.streaming) throw Error(ErrorCode::kParamInvalid, "--streaming needs --gamma1/--gamma2");
    BigInt i1, i2;
    try {
      i1 = BigInt(o.i1);
      i2 = BigInt(o.i2);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParamInvalid, "indices must be decimal integers");
    }
    out << format_permutation(d1::message_encode(i1, i2, o.n)) << "\n";
    return kOk;
  }
  if (cmd.count("--gamma1") == 0 || cmd.count("--gamma2") == 0) {
    throw Error(ErrorCode::kParamInvalid, "--gamma1 and --gamma2 go together");
  }
  const d1::Input input(parse_permutation(o.gamma1), parse_permutation(o.gamma2));
  if (input.n() != o.n) throw Error(ErrorCode::kParamInvalid, "gamma lengths do not match --n/2");
  if (!o.streaming) {
    if (o.trace) throw Error(ErrorCode::kParamInvalid, "--trace needs --streaming");
    out << format_permutation(d1::encode(input)) << "\n";
    return kOk;
  }
  const auto r = d1::encode_streaming(input);
  if (!o.trace) {
    out << format_permutation(r.permutation) << "\n";
    return kOk;
  }
  Json j;
  j["permutation"] = format_permutation(r.permutation);
  j["interleaved"] = format_permutation(r.interleaved);
  j["initial_deviation"] = to_string(r.initial_deviation);
  Json steps = Json::array();
  for (const auto& s : r.trace) steps.push_back(Json{{"position", s.position}, {"moved_symbol", s.moved_symbol}});
  j["trace"] = std::move(steps);
  out << json::dump(j);
  return kOk;
}

int cmd_decode_d1(const Options& o, std::istream& in, std::ostream& out) {
  const auto pi = perm_arg(o.perm, in);
  if (o.index) {
    const auto [i1, i2] = d1::message_decode(pi);
    out << i1.str() << "\n" << i2.str() << "\n";
    return kOk;
  }
  const auto input = d1::decode(pi);
  out << format_permutation(input.gamma1) << "\n" << format_permutation(input.gamma2) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const auto pi = perm_arg(o.perm, in);
  ViolationReport report;
  if (o.preset == "d1") {
    report = verify_balance(pi, BalanceSpec::d1(pi.size()));
  } else if (o.preset == "d2") {
    if (o.blocks == 0) throw Error(ErrorCode::kParamInvalid, "--preset d2 needs --N");
    report = verify_balance(pi, BalanceSpec::d2(pi.size(), o.blocks));
  } else {
    if (o.k == 0) throw Error(ErrorCode::kParamInvalid, "--preset tn-neighbor needs --k");
    report = check_two_neighbor(pi, NeighborSpec{static_cast<int>(o.k)});
  }
  out << json::dump(json::to_json(report));
  return report_exit(report);
}

BalanceSpec census_spec(const Options& o) {
  if (o.preset == "d1") return BalanceSpec::d1(o.n);
  if (o.preset == "d2") {
    if (o.blocks == 0) throw Error(ErrorCode::kParamInvalid, "--preset d2 needs --N");
    return BalanceSpec::d2(o.n, o.blocks);
  }
  if (o.block_list.empty() || o.dev.empty()) {
    throw Error(ErrorCode::kParamInvalid, "--preset custom needs --blocks and --dev");
  }
  return BalanceSpec::uniform(o.n, o.block_list, parse_rational(o.dev));
}

analysis::CodecConfig codec_config(const Options& o, std::size_t n) {
  if (o.codec == "d1") return analysis::D1Config{};
  if (o.codec == "d2") {
    if (!o.epsilon.empty()) {
      const Rational eps = parse_rational(o.epsilon);
      const auto params = d2::Params::from_epsilon(n, eps);
      if (o.blocks != 0 && o.blocks != params.blocks()) {
        throw Error(ErrorCode::kParamInvalid, "--N disagrees with ceil(n^epsilon)");
      }
      return analysis::D2Config{params.blocks(), eps};
    }
    if (o.blocks == 0) throw Error(ErrorCode::kParamInvalid, "--codec d2 needs --N or --epsilon");
    return analysis::D2Config{o.blocks, std::nullopt};
  }
  if (!o.epsilon_k.empty()) {
    const Rational eps = parse_rational(o.epsilon_k);
    const auto params = tn::Params::from_epsilon(n, eps);
    if (o.k != 0 && o.k != params.k()) {
      throw Error(ErrorCode::kParamInvalid, "--k disagrees with ceil(n^epsilon_k)");
    }
    return analysis::TnConfig{params.k(), eps};
  }
  if (o.k == 0) throw Error(ErrorCode::kParamInvalid, "--codec tn needs --k or --epsilon-k");
  return analysis::TnConfig{o.k, std::nullopt};
}

// Same digits as the JSON report.
std::string csv_number(const std::optional<double>& v) { return v ? Json(*v).dump() : ""; }

int cmd_rate(const Options& o, std::ostream& out) {
  analysis::EnumerationOptions eo{o.limit, threads_of(o)};
  std::vector<analysis::RateReport> reports;
  for (std::size_t n : o.n_list) reports.push_back(analysis::rate_report(codec_config(o, n), n, eo));
  if (o.format == "csv") {
    out << "n,config,code_size,code_log2,rate,perm_log2,target\n";
    for (const auto& r : reports) {
      out << r.n << ",\"" << r.config << "\"," << (r.code_size ? r.code_size->str() : "") << ","
          << csv_number(r.code_log2) << "," << csv_number(r.rate) << "," << csv_number(r.perm_log2)
          << "," << csv_number(r.target) << "\n";
    }
    return kOk;
  }
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(json::to_json(r));
  out << json::dump(arr);
  return kOk;
}

int cmd_claims(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<Permutation> perms;
  if (!o.input.empty()) {
    std::istringstream ss(read_source(o.input, in));
    perms = read_permutations(ss);
  } else if (!o.perm.empty()) {
    perms.push_back(perm_arg(o.perm, in));
  } else {
    throw Error(ErrorCode::kParamInvalid, "claims needs --input or --perm");
  }
  const std::size_t n = o.n != 0 ? o.n : (perms.empty() ? 0 : perms.front().size());
  if (n == 0) throw Error(ErrorCode::kParamInvalid, "no permutations to check");
  const auto report = analysis::claim_suite(perms, codec_config(o, n), n, threads_of(o));
  out << json::dump(json::to_json(report));
  return report.all_passed() ? kOk : kViolation;
}

int dispatch(CLI::App& app, const Options& o, std::istream& in, std::ostream& out) {
  auto* encode = app.get_subcommand("encode");
  auto* decode = app.get_subcommand("decode");
  auto* analyze = app.get_subcommand("analyze");

  if (encode->parsed()) {
    if (auto* c = encode->get_subcommand("d1"); c->parsed()) return cmd_encode_d1(o, *c, out);
    if (encode->get_subcommand("d2")->parsed()) {
      const auto input = json::parse_d2_input(json::parse(read_source(o.input, in)));
      out << format_permutation(d2::encode(input)) << "\n";
      return kOk;
    }
    const auto input = json::parse_tn_input(json::parse(read_source(o.input, in)));
    out << format_permutation(tn::encode(input)) << "\n";
    return kOk;
  }
  if (decode->parsed()) {
    if (decode->get_subcommand("d1")->parsed()) return cmd_decode_d1(o, in, out);
    const auto pi = perm_arg(o.perm, in);
    if (decode->get_subcommand("d2")->parsed()) {
      out << json::dump(json::to_json(d2::decode(pi, d2::Params::make(o.n, o.blocks))));
      return kOk;
    }
    out << json::dump(json::to_json(tn::decode(pi, tn::Params::make(o.n, o.k))));
    return kOk;
  }
  if (app.get_subcommand("verify")->parsed()) return cmd_verify(o, in, out);
  if (app.get_subcommand("disc")->parsed()) {
    const auto pi = perm_arg(o.perm, in);
    Json j;
    j["b"] = o.b;
    j["disc"] = to_string(disc(pi, o.b));
    out << json::dump(j);
    return kOk;
  }
  if (analyze->parsed()) {
    const analysis::EnumerationOptions eo{o.limit, threads_of(o)};
    if (analyze->get_subcommand("census")->parsed()) {
      std::optional<NeighborSpec> neighbor;
      if (o.k != 0) neighbor = NeighborSpec{static_cast<int>(o.k)};
      out << json::dump(json::to_json(analysis::census(o.n, census_spec(o), neighbor, o.cap, eo)));
      return kOk;
    }
    if (analyze->get_subcommand("min-disc")->parsed()) {
      out << json::dump(json::to_json(analysis::min_disc(o.n, o.b, eo), o.n, o.b));
      return kOk;
    }
    if (analyze->get_subcommand("rate")->parsed()) return cmd_rate(o, out);
    return cmd_claims(o, in, out);
  }
  return kUsage;
}

void add_threads(CLI::App* cmd, Options& o) {
  cmd->add_option("--threads", o.threads, "Worker threads (default: BPC_THREADS, 0 = sequential)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--limit", o.limit, "Largest n that may be enumerated exhaustively")
      ->check(CLI::Range(std::size_t{1}, analysis::kHardEnumerationLimit));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Balanced permutation codes: codecs, verifiers and analyses", "bpc"};
  app.require_subcommand(1);

  auto* encode = app.add_subcommand("encode", "Encode into a permutation")->require_subcommand(1);
  auto* enc_d1 = encode->add_subcommand("d1", "Running-average code from two half orderings");
  enc_d1->add_option("--n", o.n, "Length (even)")->required();
  enc_d1->add_option("--gamma1", o.gamma1, "Ordering of the low half");
  enc_d1->add_option("--gamma2", o.gamma2, "Ordering of the high half");
  enc_d1->add_option("--i1", o.i1, "Lexicographic index of gamma1 (decimal)");
  enc_d1->add_option("--i2", o.i2, "Lexicographic index of gamma2 (decimal)");
  enc_d1->add_flag("--streaming", o.streaming, "Use the in-place transposition encoder");
  enc_d1->add_flag("--trace", o.trace, "With --streaming, emit the transposition trace as JSON");
  encode->add_subcommand("d2", "Block-cell code from a JSON input")
      ->add_option("--input", o.input, "D2 input JSON file, or - for stdin")
      ->required();
  encode->add_subcommand("tn", "Two-neighbor code from a JSON input")
      ->add_option("--input", o.input, "Two-neighbor input JSON file, or - for stdin")
      ->required();

  auto* decode = app.add_subcommand("decode", "Recover encoder inputs")->require_subcommand(1);
  auto* dec_d1 = decode->add_subcommand("d1", "Split into gamma1 / gamma2");
  dec_d1->add_option("--perm", o.perm, "Permutation, or - for stdin")->required();
  dec_d1->add_flag("--index", o.index, "Print lexicographic indices instead of orderings");
  auto* dec_d2 = decode->add_subcommand("d2", "Project onto blocks");
  dec_d2->add_option("--perm", o.perm)->required();
  dec_d2->add_option("--n", o.n)->required();
  dec_d2->add_option("--N", o.blocks)->required();
  auto* dec_tn = decode->add_subcommand("tn", "Recover orderings and selector");
  dec_tn->add_option("--perm", o.perm)->required();
  dec_tn->add_option("--n", o.n)->required();
  dec_tn->add_option("--k", o.k)->required();

  auto* verify = app.add_subcommand("verify", "Check a permutation against a preset");
  verify->add_option("--preset", o.preset)->required()->check(CLI::IsMember({"d1", "d2", "tn-neighbor"}));
  verify->add_option("--N", o.blocks, "Block count for the d2 preset");
  verify->add_option("--k", o.k, "Neighbor bound for tn-neighbor");
  verify->add_option("--perm", o.perm)->required();

  auto* disc_cmd = app.add_subcommand("disc", "Discrepancy of a permutation for one block length");
  disc_cmd->add_option("--perm", o.perm)->required();
  disc_cmd->add_option("--b", o.b)->required();

  auto* analyze = app.add_subcommand("analyze", "Exhaustive oracles and reports")->require_subcommand(1);
  auto* census = analyze->add_subcommand("census", "Count permutations of S_n passing a spec");
  census->add_option("--n", o.n)->required();
  census->add_option("--preset", o.preset)->required()->check(CLI::IsMember({"d1", "d2", "custom"}));
  census->add_option("--N", o.blocks);
  census->add_option("--blocks", o.block_list, "Block lengths for --preset custom")->delimiter(',');
  census->add_option("--dev", o.dev, "Allowed deviation for --preset custom (p/q or decimal)");
  census->add_option("--k", o.k, "Also require the two-neighbor k-constraint");
  census->add_option("--cap", o.cap, "Maximum achievers listed");
  add_threads(census, o);
  auto* min_disc_cmd = analyze->add_subcommand("min-disc", "Minimum discrepancy over S_n");
  min_disc_cmd->add_option("--n", o.n)->required();
  min_disc_cmd->add_option("--b", o.b)->required();
  add_threads(min_disc_cmd, o);
  auto* rate = analyze->add_subcommand("rate", "Code size and rate");
  rate->add_option("--codec", o.codec)->required()->check(CLI::IsMember({"d1", "d2", "tn"}));
  rate->add_option("--n", o.n_list, "One or more lengths")->required()->delimiter(',');
  rate->add_option("--N", o.blocks);
  rate->add_option("--epsilon", o.epsilon, "d2 exponent; N = ceil(n^epsilon)");
  rate->add_option("--k", o.k);
  rate->add_option("--epsilon-k", o.epsilon_k, "tn exponent; k = ceil(n^epsilon_k)");
  rate->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  add_threads(rate, o);
  auto* claims = analyze->add_subcommand("claims", "Check construction bounds on codewords");
  claims->add_option("--codec", o.codec)->required()->check(CLI::IsMember({"d1", "d2", "tn"}));
  claims->add_option("--n", o.n);
  claims->add_option("--N", o.blocks);
  claims->add_option("--k", o.k);
  claims->add_option("--input", o.input, "Permutations, one per line, or - for stdin");
  claims->add_option("--perm", o.perm);
  add_threads(claims, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return dispatch(app, o, in, out);
  } catch (const SourceExhausted& e) {
    err << "internal: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kNotCodeword ? kViolation : kUsage;
  }
}

}  // namespace bpc::cli
