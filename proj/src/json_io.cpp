#include "bpc/json_io.hpp"

#include "bpc/error.hpp"
#include "bpc/text_format.hpp"

namespace bpc::json {

namespace {

Json perm_array(const Permutation& pi) {
  Json a = Json::array();
  for (int v : pi.values()) a.push_back(v);
  return a;
}

std::vector<Permutation> parse_sigmas(const Json& j) {
  std::vector<Permutation> out;
  for (const auto& s : j.at("sigmas")) out.emplace_back(s.get<std::vector<int>>());
  return out;
}

std::string decimal(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParamInvalid, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const ViolationReport& report) {
  Json out;
  out["valid"] = report.is_valid();
  Json list = Json::array();
  for (const auto& e : report.entries) {
    Json v;
    v["b"] = e.b;
    v["j"] = e.j;
    v["sum"] = e.window_sum;
    v["target"] = to_string(e.target);
    v["allowed"] = to_string(e.allowed);
    v["actual"] = to_string(e.actual);
    list.push_back(std::move(v));
  }
  for (const auto& e : report.neighbor_entries) {
    Json v;
    v["i"] = e.i;
    v["left"] = e.left_gap;
    v["right"] = e.right_gap;
    v["k"] = e.k;
    list.push_back(std::move(v));
  }
  out["violations"] = std::move(list);
  return out;
}

Json to_json(const d2::Input& input) {
  Json out;
  out["n"] = input.params.n();
  out["N"] = input.params.blocks();
  Json sigmas = Json::array();
  for (const auto& s : input.sigmas) sigmas.push_back(perm_array(s));
  out["sigmas"] = std::move(sigmas);
  return out;
}

d2::Input parse_d2_input(const Json& j) {
  try {
    const auto params = d2::Params::make(j.at("n").get<std::size_t>(), j.at("N").get<std::size_t>());
    return d2::Input(params, parse_sigmas(j));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParamInvalid, std::string("bad D2 input: ") + e.what());
  }
}

Json to_json(const tn::Input& input) {
  Json out;
  out["n"] = input.params.n();
  out["k"] = input.params.k();
  Json sigmas = Json::array();
  for (const auto& s : input.sigmas) sigmas.push_back(perm_array(s));
  out["sigmas"] = std::move(sigmas);
  out["selector"] = input.selector;
  return out;
}

tn::Input parse_tn_input(const Json& j) {
  try {
    const auto params = tn::Params::make(j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>());
    return tn::Input(params, parse_sigmas(j), j.at("selector").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParamInvalid, std::string("bad two-neighbor input: ") + e.what());
  }
}

Json to_json(const analysis::CensusResult& result) {
  Json out;
  out["n"] = result.n;
  out["blocks"] = result.spec.blocks();
  Json devs = Json::array();
  for (const auto& d : result.spec.dev_max()) devs.push_back(to_string(d));
  out["dev_max"] = std::move(devs);
  if (result.neighbor) {
    out["k"] = result.neighbor->k;
  } else {
    out["k"] = nullptr;
  }
  out["count"] = decimal(result.count);
  Json achievers = Json::array();
  for (const auto& pi : result.achievers) achievers.push_back(format_permutation(pi));
  out["achievers"] = std::move(achievers);
  return out;
}

Json to_json(const analysis::MinDiscResult& result, std::size_t n, std::size_t b) {
  Json out;
  out["n"] = n;
  out["b"] = b;
  out["min_disc"] = to_string(result.value);
  out["achiever_count"] = decimal(result.achiever_count);
  return out;
}

Json to_json(const analysis::RateReport& report) {
  Json out;
  out["n"] = report.n;
  out["config"] = report.config;
  if (report.code_size) {
    out["code_size"] = report.code_size->str();
    out["code_log2"] = *report.code_log2;
    out["rate"] = *report.rate;
  } else {
    out["code_size"] = "not computed";
    out["code_log2"] = nullptr;
    out["rate"] = nullptr;
  }
  out["perm_log2"] = report.perm_log2;
  if (report.target) {
    out["target"] = *report.target;
  } else {
    out["target"] = nullptr;
  }
  return out;
}

Json to_json(const analysis::ClaimReport& report) {
  Json out;
  out["config"] = report.config;
  out["all_passed"] = report.all_passed();
  Json bounds = Json::array();
  for (const auto& b : report.bounds) {
    Json e;
    e["name"] = b.name;
    e["checked"] = decimal(b.checked);
    e["passed"] = decimal(b.passed);
    e["failed"] = decimal(b.failed);
    if (b.first_failure) {
      Json f;
      f["index"] = b.first_failure->index;
      f["permutation"] = format_permutation(b.first_failure->permutation);
      f["detail"] = b.first_failure->detail;
      e["first_failure"] = std::move(f);
    } else {
      e["first_failure"] = nullptr;
    }
    bounds.push_back(std::move(e));
  }
  out["bounds"] = std::move(bounds);
  return out;
}

}  // namespace bpc::json
