#pragma once

#include <json.hpp>
#include <string>

#include "lrs/bounds.hpp"
#include "lrs/code.hpp"

namespace lrs::report {

using nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

json to_json(const FieldTower& tower);
json to_json(FElem e);
json to_json(const SkewPoly& f);
json to_json(const BlockVector& x);
json to_json(const EvalPair& pair);
json to_json(const BoundReport& r);
json to_json(const ListOracleResult& r);
json to_json(const WitnessList& w);
json to_json(const CodeCertificate& c);
json to_json(const RateSearch& r);
json to_json(const Construction1Instance& inst);

/// {p, m, s, ell, eta, k, a, beta}, with a and β always filled in.
json code_spec(const LrsCode& code);
LrsCode parse_code_spec(const json& j);
LrsCode load_code_spec(const std::string& path);

FElem parse_element(const FieldTower& tower, const json& coords);
SkewPoly parse_skew_poly(const Automorphism& sigma, const json& coeffs);

std::string rational_string(const Rational& r);
std::string big_string(const BigInt& x);

/// 64-bit FNV-1a of the canonical dump, as 16 hex digits.
std::string fingerprint(const json& j);

/// {command, inputs, outputs, versions}
json make_report(const std::string& command, json inputs, json outputs);

/// Pretty-printed with sorted keys and a trailing LF.
std::string dump(const json& j);

}  // namespace lrs::report
