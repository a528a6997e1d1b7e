#pragma once

#include <string>

#include "json.hpp"

#include "bpc/analysis.hpp"
#include "bpc/d2_codec.hpp"
#include "bpc/tn_codec.hpp"
#include "bpc/verify.hpp"

namespace bpc::json {

using Json = nlohmann::ordered_json;

/// Compact dump plus trailing newline; key order is insertion order.
std::string dump(const Json& j);

/// {"valid", "violations": [{"b","j","sum","target","allowed","actual"}]}
/// for balance reports; neighbor reports list {"i","left","right","k"}.
Json to_json(const ViolationReport& report);

/// {"n", "N", "sigmas"}
Json to_json(const d2::Input& input);
d2::Input parse_d2_input(const Json& j);

/// {"n", "k", "sigmas", "selector"}
Json to_json(const tn::Input& input);
tn::Input parse_tn_input(const Json& j);

Json to_json(const analysis::CensusResult& result);
Json to_json(const analysis::MinDiscResult& result, std::size_t n, std::size_t b);
Json to_json(const analysis::RateReport& report);
Json to_json(const analysis::ClaimReport& report);

/// Parses text as JSON; throws Error(kParamInvalid) on malformed input.
Json parse(const std::string& text);

}  // namespace bpc::json
