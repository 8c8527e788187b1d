#include "lrs/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <optional>

#include "lrs/bounds.hpp"
#include "lrs/report.hpp"
#include "lrs/verify.hpp"

namespace lrs::cli {

using report::json;

namespace {

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string csv_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

struct Common {
    std::string format = "json";
    uint64_t max_enum = kDefaultEnumCap;
    uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--max-enum", c.max_enum, "enumeration cap");
    sub->add_option("--seed", c.seed, "seed for randomized suites");
}

json code_inputs(const std::string& path, const LrsCode& code) { return {{"spec_file", path}, {"code", report::code_spec(code)}}; }

// Subcommand bodies. Each writes its report and returns an exit code.

int cmd_encode(const std::string& spec, const std::optional<std::string>& message, const std::optional<uint64_t>& index,
               std::ostream& out) {
    const LrsCode code = report::load_code_spec(spec);
    SkewPoly f = SkewPoly::constant(code.sigma, code.tower->zero());
    if (message && index) fail(ErrorKind::InvalidArgument, "give either --message or --message-index");
    if (message) {
        json j;
        try {
            j = json::parse(*message);
        } catch (const json::exception& e) {
            fail(ErrorKind::ParseError, std::string("--message is not JSON: ") + e.what());
        }
        f = report::parse_skew_poly(code.sigma, j);
    } else if (index) {
        f = message_from_index(code, *index);
    } else {
        fail(ErrorKind::InvalidArgument, "--message or --message-index is required");
    }
    json inputs = code_inputs(spec, code);
    inputs["message"] = report::to_json(f);
    const BlockVector c = encode(code, f);
    out << report::dump(report::make_report("encode", inputs, {{"codeword", report::to_json(c)}, {"weight", sum_rank_weight(c)}}));
    return kOk;
}

int cmd_mindist(const std::string& spec, const Common& common, std::ostream& out) {
    const LrsCode code = report::load_code_spec(spec);
    const uint32_t d = min_distance_exhaustive(code, common.max_enum);
    const bool msrd = d == code.d();
    out << report::dump(report::make_report(
        "mindist", code_inputs(spec, code),
        {{"min_distance", d}, {"singleton_bound", code.d()}, {"msrd", msrd}, {"certificate", report::to_json(validate_code(code))}}));
    return msrd ? kOk : kVerificationFailure;
}

int cmd_oracle(const std::string& spec, uint32_t tau, const std::string& strategy, unsigned workers, const Common& common,
               std::ostream& out) {
    const LrsCode code = report::load_code_spec(spec);
    OracleOptions opt;
    opt.strategy = parse_strategy(strategy);
    if (opt.strategy == CenterStrategy::Given) fail(ErrorKind::InvalidArgument, "strategy must be all or cosets");
    opt.max_enum = common.max_enum;
    opt.workers = workers;
    const ListOracleResult res = list_size_oracle(code, tau, opt);
    const bool rechecked = recheck_oracle_result(code, res);
    json outputs = report::to_json(res);
    outputs["rechecked"] = rechecked;
    bool ok = rechecked;
    if (tau < code.d() && res.exact) {
        const BoundReport b = theorem1_bound(code.ell, code.eta, code.tower->m(), code.tower->p(), code.d(), tau);
        const bool holds = b.at_most(res.max_list);
        outputs["theorem1_bound"] = report::to_json(b);
        outputs["theorem1_bound_holds"] = holds;
        ok = ok && holds;
    }
    json inputs = code_inputs(spec, code);
    inputs["tau"] = tau;
    inputs["strategy"] = strategy;
    out << report::dump(report::make_report("oracle", inputs, outputs));
    return ok ? kOk : kVerificationFailure;
}

int cmd_witness(const std::string& spec, uint32_t tau, uint32_t sparsity, const Common& common, std::ostream& out) {
    const LrsCode base = report::load_code_spec(spec);
    json inputs = code_inputs(spec, base);
    inputs["tau"] = tau;
    inputs["sparsity"] = sparsity;
    std::optional<LrsCode> code;
    std::vector<SkewPoly> S;
    if (sparsity == 0) {
        code = base;
        S = weight_ball_preimages(base.pair, tau, common.max_enum);
    } else {
        const StructuredPair sp = make_structured_pair(base.tower, base.sigma, base.pair.a, base.eta, sparsity);
        code = make_code(sp.outer, base.k);
        S = sparse_set_enumerate(sp, tau, common.max_enum);
    }
    const WitnessList w = pigeonhole_witness(*code, S, tau);
    const bool guarantee = w.meets_guarantee(code->field_order());
    const bool verified = verify_witness(*code, w);
    json outputs = report::to_json(w);
    outputs["code"] = report::code_spec(*code);
    outputs["guarantee_holds"] = guarantee;
    outputs["verified"] = verified;
    out << report::dump(report::make_report("witness", inputs, outputs));
    return guarantee && verified ? kOk : kVerificationFailure;
}

struct BoundArgs {
    std::string kind;
    uint64_t q = 0;
    uint32_t ell = 0, m = 0, eta = 0, d = 0, tau = 0, g = 1, k = 0, t = 0, n = 0, C = 0, D = 0;
    double R = 0, eps = 0, a = 0;
};

int cmd_bound(const BoundArgs& b, std::ostream& out) {
    json inputs{{"kind", b.kind}};
    json outputs;
    auto need = [&](std::initializer_list<std::pair<const char*, bool>> flags) {
        for (auto [name, present] : flags)
            if (!present) fail(ErrorKind::InvalidArgument, std::string("bound ") + b.kind + " requires --" + name);
    };
    if (b.kind == "theorem1") {
        need({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}, {"d", b.d}});
        inputs.update({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}, {"d", b.d}, {"tau", b.tau}});
        outputs = report::to_json(theorem1_bound(b.ell, b.eta, b.m, b.q, b.d, b.tau));
    } else if (b.kind == "lemma2") {
        need({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}});
        inputs.update({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}, {"t", b.t}});
        outputs = report::to_json(lemma2_bound(b.t, b.ell, b.eta, b.m, b.q));
        outputs["exact_sphere_size"] = report::big_string(sphere_size(b.t, b.ell, b.eta, b.m, b.q).exact);
    } else if (b.kind == "theorem2") {
        need({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}});
        inputs.update({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}, {"g", b.g}, {"tau", b.tau}});
        outputs = report::to_json(theorem2_bound(b.ell, b.eta, b.m, b.q, b.g, b.tau));
    } else if (b.kind == "corollary1") {
        need({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"n", b.n}, {"d", b.d}});
        inputs.update({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"n", b.n}, {"d", b.d}, {"eps", b.eps}});
        outputs = {{"radius", corollary1_radius(b.ell, b.m, b.n, b.d, b.q, b.eps)}};
    } else if (b.kind == "corollary2") {
        need({{"ell", b.ell}, {"n", b.n}});
        inputs.update({{"R", b.R}, {"ell", b.ell}, {"n", b.n}, {"eps", b.eps}});
        outputs = {{"radius", corollary2_radius(b.R, b.ell, b.n, b.eps)}};
    } else if (b.kind == "corollary3") {
        need({{"q", b.q}});
        inputs.update({{"R", b.R}, {"a", b.a}, {"q", b.q}, {"eps", b.eps}});
        const Corollary3Params p = corollary3_params(b.R, b.a, b.q, b.eps);
        outputs = {{"zeta", p.zeta}, {"delta", p.delta}, {"b", p.b}};
    } else if (b.kind == "corollary4") {
        need({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}, {"k", b.k}});
        inputs.update({{"q", b.q}, {"ell", b.ell}, {"m", b.m}, {"eta", b.eta}, {"g", b.g}, {"tau", b.tau}, {"k", b.k}});
        outputs = report::to_json(corollary4_bound(b.ell, b.eta, b.m, b.q, b.g, b.tau, b.k));
    } else if (b.kind == "theorem3") {
        need({{"q", b.q}, {"ell", b.ell}, {"C", b.C}, {"D", b.D}});
        const FamilyParams fp{b.ell, b.C, b.D, b.g};
        inputs.update({{"q", b.q}, {"ell", b.ell}, {"C", b.C}, {"D", b.D}, {"g", b.g}});
        outputs = report::to_json(theorem3_bound(fp, b.q));
        outputs["instance"] = report::to_json(construction1_instance(fp, b.q));
    } else {
        fail(ErrorKind::InvalidArgument, "unknown bound kind '" + b.kind + "'");
    }
    out << report::dump(report::make_report("bound", inputs, outputs));
    return kOk;
}

int cmd_table1(const std::string& range, const Common& common, std::ostream& out) {
    const auto [lo, hi] = parse_range(range);
    std::vector<RateSearch> rows;
    for (uint32_t ell = lo; ell <= hi; ++ell) rows.push_back(minimize_rate(ell));
    if (common.format == "csv") {
        out << "ell,rate_numerator,rate_denominator,rate_decimal_6dp,C,D\n";
        for (const auto& r : rows)
            out << r.ell << ',' << boost::multiprecision::numerator(r.rate) << ','
                << boost::multiprecision::denominator(r.rate) << ',' << fixed6(r.rate.convert_to<double>()) << ',' << r.C
                << ',' << r.D << '\n';
        return kOk;
    }
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(report::to_json(r));
    out << report::dump(report::make_report("table1", {{"ell", range}}, {{"rows", arr}}));
    return kOk;
}

int cmd_regions(uint32_t steps, const Common& common, std::ostream& out) {
    if (steps == 0) fail(ErrorKind::InvalidArgument, "--steps must be positive");
    std::vector<double> grid;
    for (uint32_t i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) / steps);
    const auto rows = emit_region_data(grid);
    if (common.format == "csv") {
        out << "R,johnson,unique\n";
        for (const auto& r : rows) out << csv_double(r.R) << ',' << csv_double(r.johnson) << ',' << csv_double(r.unique) << '\n';
        return kOk;
    }
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"R", r.R}, {"johnson", r.johnson}, {"unique", r.unique}});
    out << report::dump(report::make_report("regions", {{"steps", steps}}, {{"rows", arr}}));
    return kOk;
}

int cmd_verify(const std::string& suite, const Common& common, std::ostream& out) {
    const auto results = run_suites(suite, common.seed);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.ok();
    if (common.format == "csv") {
        out << "suite,check,passed,detail\n";
        for (const auto& r : results)
            for (const auto& c : r.checks) out << r.suite << ",\"" << c.name << "\"," << (c.passed ? 1 : 0) << ",\"" << c.detail << "\"\n";
        return ok ? kOk : kVerificationFailure;
    }
    json arr = json::array();
    for (const auto& r : results) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        arr.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}});
    }
    out << report::dump(report::make_report("verify", {{"suite", suite}, {"seed", common.seed}}, {{"ok", ok}, {"suites", arr}}));
    return ok ? kOk : kVerificationFailure;
}

}  // namespace

std::pair<uint32_t, uint32_t> parse_range(const std::string& text) {
    auto to_u32 = [&](const std::string& s) -> uint32_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
            fail(ErrorKind::InvalidArgument, "bad range '" + text + "'");
        return static_cast<uint32_t>(std::stoul(s));
    };
    const auto dots = text.find("..");
    const uint32_t lo = to_u32(text.substr(0, dots));
    const uint32_t hi = dots == std::string::npos ? lo : to_u32(text.substr(dots + 2));
    if (lo == 0 || hi < lo) fail(ErrorKind::InvalidArgument, "bad range '" + text + "'");
    return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linearized Reed-Solomon codes: sum-rank metrics, list-size oracles and lower bounds", "lrstool"};
    app.require_subcommand(1);
    Common common;
    std::string spec, strategy = "cosets", range = "1..20", suite = "all";
    std::optional<std::string> message;
    std::optional<uint64_t> message_index;
    uint32_t tau = 0, sparsity = 0, steps = 100;
    unsigned workers = 1;
    BoundArgs b;

    auto* encode_cmd = app.add_subcommand("encode", "encode a message under a code spec");
    encode_cmd->add_option("--spec", spec, "code-spec JSON file")->required();
    encode_cmd->add_option("--message", message, "coefficients as JSON, e.g. [[1,0],[0,1]]");
    encode_cmd->add_option("--message-index", message_index, "message number in lexicographic order");
    add_common(encode_cmd, common);

    auto* mindist_cmd = app.add_subcommand("mindist", "exhaustive minimum sum-rank distance");
    mindist_cmd->add_option("--spec", spec, "code-spec JSON file")->required();
    add_common(mindist_cmd, common);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force maximum list size");
    oracle_cmd->add_option("--spec", spec, "code-spec JSON file")->required();
    oracle_cmd->add_option("--tau", tau, "radius")->required();
    oracle_cmd->add_option("--strategy", strategy, "all or cosets")->check(CLI::IsMember({"all", "cosets"}));
    oracle_cmd->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));
    add_common(oracle_cmd, common);

    auto* witness_cmd = app.add_subcommand("witness", "pigeonhole witness list");
    witness_cmd->add_option("--spec", spec, "code-spec JSON file")->required();
    witness_cmd->add_option("--tau", tau, "radius")->required();
    witness_cmd->add_option("--sparsity", sparsity, "use sparse polynomials in x^g");
    add_common(witness_cmd, common);

    auto* bound_cmd = app.add_subcommand("bound", "evaluate a lower bound or radius");
    bound_cmd->add_option("kind", b.kind, "theorem1|lemma2|theorem2|theorem3|corollary1|corollary2|corollary3|corollary4")
        ->required();
    bound_cmd->add_option("--q", b.q);
    bound_cmd->add_option("--ell", b.ell);
    bound_cmd->add_option("--m", b.m);
    bound_cmd->add_option("--eta", b.eta);
    bound_cmd->add_option("--d", b.d);
    bound_cmd->add_option("--tau", b.tau);
    bound_cmd->add_option("--g", b.g);
    bound_cmd->add_option("--k", b.k);
    bound_cmd->add_option("--t", b.t);
    bound_cmd->add_option("--n", b.n);
    bound_cmd->add_option("--C", b.C);
    bound_cmd->add_option("--D", b.D);
    bound_cmd->add_option("--R", b.R);
    bound_cmd->add_option("--eps", b.eps);
    bound_cmd->add_option("--a", b.a);
    add_common(bound_cmd, common);

    auto* table_cmd = app.add_subcommand("table1", "minimum-rate family parameters per ell");
    table_cmd->add_option("--ell", range, "range such as 1..20");
    add_common(table_cmd, common);

    auto* regions_cmd = app.add_subcommand("regions", "Johnson and unique-decoding radii over a rate grid");
    regions_cmd->add_option("--steps", steps, "grid intervals on [0, 1]");
    add_common(regions_cmd, common);

    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("suite", suite, "gf|skewpoly|sumrank|lrs|bounds|all");
    add_common(verify_cmd, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*encode_cmd) return cmd_encode(spec, message, message_index, out);
        if (*mindist_cmd) return cmd_mindist(spec, common, out);
        if (*oracle_cmd) return cmd_oracle(spec, tau, strategy, workers, common, out);
        if (*witness_cmd) return cmd_witness(spec, tau, sparsity, common, out);
        if (*bound_cmd) return cmd_bound(b, out);
        if (*table_cmd) return cmd_table1(range, common, out);
        if (*regions_cmd) return cmd_regions(steps, common, out);
        if (*verify_cmd) return cmd_verify(suite, common, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::EnumerationTooLarge ? kCapExceeded : kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace lrs::cli
