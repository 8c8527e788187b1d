#include "lrs/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lrs::report {

namespace {

json coords_list(const std::vector<FElem>& v) {
    json out = json::array();
    for (FElem e : v) out.push_back(to_json(e));
    return out;
}

uint32_t get_u32(const json& j, const char* key) {
    if (!j.contains(key)) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) fail(ErrorKind::ParseError, std::string("field '") + key + "' must be a non-negative integer");
    return v.get<uint32_t>();
}

}  // namespace

std::string rational_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string big_string(const BigInt& x) { return x.str(); }

json to_json(const FieldTower& t) {
    return {{"p", t.p()},
            {"m", t.m()},
            {"modulus_coeffs", t.modulus()},
            {"primitive_coeffs", t.primitive_element().coords()}};
}

json to_json(FElem e) { return e.coords(); }

json to_json(const SkewPoly& f) { return {{"sigma_s", f.sigma().s()}, {"coeffs", coords_list(f.coeffs())}}; }

json to_json(const BlockVector& x) { return {{"ell", x.ell}, {"eta", x.eta}, {"data", coords_list(x.data)}}; }

json to_json(const EvalPair& pair) {
    return {{"sigma_s", pair.sigma.s()}, {"a", coords_list(pair.a)}, {"beta", coords_list(pair.beta)}};
}

json to_json(const BoundReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"bound_kind", to_string(r.kind)},
            {"q", r.q},
            {"log_q_value", rational_string(r.log_q_value)},
            {"log_q_value_decimal", r.log_q_value.convert_to<double>()},
            {"correction", r.correction},
            {"total_log_q", r.total_log_q()},
            {"value", r.value()},
            {"params", params}};
}

json to_json(const ListOracleResult& r) {
    json msgs = json::array();
    for (const auto& f : r.codewords_in_ball) msgs.push_back(to_json(f));
    return {{"max_list", r.max_list},
            {"radius", r.radius},
            {"argmax_center", to_json(r.argmax_center)},
            {"argmax_index", r.argmax_index},
            {"codewords_in_ball", msgs},
            {"centers_examined", r.centers_examined},
            {"strategy", to_string(r.strategy)},
            {"exact", r.exact}};
}

json to_json(const WitnessList& w) {
    json msgs = json::array();
    for (const auto& f : w.messages) msgs.push_back(to_json(f));
    return {{"center", to_json(w.center)},
            {"messages", msgs},
            {"list_size", w.size()},
            {"radius", w.radius},
            {"set_size", w.set_size},
            {"s", w.s},
            {"num_classes", w.num_classes}};
}

json to_json(const CodeCertificate& c) {
    json checks = json::array();
    for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
    return {{"ok", c.ok()}, {"checks", checks}};
}

json to_json(const RateSearch& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.rate.convert_to<double>());
    return {{"ell", r.ell},
            {"rate", rational_string(r.rate)},
            {"rate_decimal_6dp", buf},
            {"C", r.C},
            {"D", r.D},
            {"search_stopped_at_C", r.stop_C},
            {"search_bound", "for C >= search_stopped_at_C every admissible D gives 1 - 2D/C > 1 - 2/sqrt(C-1) > rate"}};
}

json to_json(const Construction1Instance& inst) {
    return {{"ell", inst.family.ell}, {"C", inst.family.C}, {"D", inst.family.D}, {"g", inst.family.g},
            {"q", inst.q},            {"n", inst.n},        {"k", inst.k},        {"m", inst.m},
            {"eta", inst.eta},        {"tau", inst.tau},    {"rate", rational_string(inst.rate())}};
}

json code_spec(const LrsCode& code) {
    return {{"p", code.tower->p()},   {"m", code.tower->m()}, {"s", code.sigma.s()},
            {"ell", code.ell},        {"eta", code.eta},      {"k", code.k},
            {"a", coords_list(code.pair.a)}, {"beta", coords_list(code.pair.beta)}};
}

FElem parse_element(const FieldTower& tower, const json& coords) {
    if (!coords.is_array()) fail(ErrorKind::ParseError, "field element must be an array of F_p coordinates");
    std::vector<uint32_t> c;
    for (const auto& v : coords) {
        if (!v.is_number_unsigned()) fail(ErrorKind::ParseError, "coordinates must be non-negative integers");
        c.push_back(v.get<uint32_t>());
    }
    try {
        return tower.from_coords(c);
    } catch (const Error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

SkewPoly parse_skew_poly(const Automorphism& sigma, const json& coeffs) {
    if (!coeffs.is_array()) fail(ErrorKind::ParseError, "polynomial must be an array of coefficients");
    std::vector<FElem> c;
    for (const auto& e : coeffs) c.push_back(parse_element(sigma.tower(), e));
    return SkewPoly(sigma, std::move(c));
}

LrsCode parse_code_spec(const json& j) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "code spec must be a JSON object");
    const uint32_t p = get_u32(j, "p"), m = get_u32(j, "m"), ell = get_u32(j, "ell"), eta = get_u32(j, "eta"),
                   k = get_u32(j, "k");
    const uint32_t s = j.contains("s") ? get_u32(j, "s") : 1 % m;
    const TowerPtr tower = build_tower(p, m);
    auto read_list = [&](const char* key) -> std::optional<std::vector<FElem>> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        if (!j.at(key).is_array()) fail(ErrorKind::ParseError, std::string("'") + key + "' must be an array");
        std::vector<FElem> out;
        for (const auto& e : j.at(key)) out.push_back(parse_element(*tower, e));
        return out;
    };
    auto a = read_list("a");
    auto beta = read_list("beta");
    if (a && a->size() != ell) fail(ErrorKind::ParseError, "'a' must have ell entries");
    if (beta && beta->size() != eta) fail(ErrorKind::ParseError, "'beta' must have eta entries");
    return make_code(tower, s, ell, eta, k, std::move(a), std::move(beta));
}

LrsCode load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open code spec '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return parse_code_spec(j);
}

std::string fingerprint(const json& j) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json make_report(const std::string& command, json inputs, json outputs) {
    const std::string hash = fingerprint(json{{"command", command}, {"inputs", inputs}});
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"outputs", std::move(outputs)},
            {"versions", {{"artifact", kVersion}, {"input_hash", hash}}}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace lrs::report
