#include "lrs/code.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace lrs {

uint64_t checked_pow(uint64_t base, uint64_t e, uint64_t cap, const char* what) {
    uint64_t out = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (out > cap / base)
            fail(ErrorKind::EnumerationTooLarge,
                 std::string(what) + " exceeds the enumeration cap of " + std::to_string(cap));
        out *= base;
    }
    if (out > cap)
        fail(ErrorKind::EnumerationTooLarge, std::string(what) + " exceeds the enumeration cap of " + std::to_string(cap));
    return out;
}

LrsCode make_code(const TowerPtr& tower, uint32_t s, uint32_t ell, uint32_t eta, uint32_t k,
                  std::optional<std::vector<FElem>> a, std::optional<std::vector<FElem>> beta) {
    Automorphism sigma(tower, s);
    EvalPair pair{sigma, {}, {}};
    if (!a || !beta) {
        const EvalPair def = make_eval_pair(tower, sigma, ell, eta);
        pair.a = a ? *a : def.a;
        pair.beta = beta ? *beta : def.beta;
    } else {
        pair.a = *a;
        pair.beta = *beta;
    }
    if (pair.ell() != ell || pair.eta() != eta) fail(ErrorKind::ShapeMismatch, "a/beta lengths disagree with ell/eta");
    return make_code(std::move(pair), k);
}

LrsCode make_code(EvalPair pair, uint32_t k) {
    const TowerPtr tower = pair.sigma.tower_ptr();
    const Automorphism sigma = pair.sigma;
    const uint32_t ell = pair.ell(), eta = pair.eta();
    LrsCode code{tower, sigma, std::move(pair), ell * eta, k, ell, eta};
    std::string failed;
    for (const auto& c : validate_code(code).checks)
        if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
    if (!failed.empty()) fail(ErrorKind::InvalidCode, "invalid code parameters: " + failed);
    return code;
}

BlockVector encode(const LrsCode& code, const SkewPoly& f) {
    if (f.degree() >= static_cast<int>(code.k))
        fail(ErrorKind::MessageDegreeTooLarge,
             "deg f = " + std::to_string(f.degree()) + " is not below k = " + std::to_string(code.k));
    return BlockVector(code.ell, code.eta, multi_eval(f, code.pair));
}

SkewPoly message_from_index(const LrsCode& code, uint64_t index) {
    const uint64_t Q = code.field_order();
    std::vector<FElem> c(code.k, code.tower->zero());
    for (uint32_t i = code.k; i-- > 0;) {
        c[i] = FElem(*code.tower, static_cast<uint32_t>(index % Q));
        index /= Q;
    }
    if (index != 0) fail(ErrorKind::InvalidArgument, "message index out of range");
    return SkewPoly(code.sigma, std::move(c));
}

namespace {

// Writes the base-Q digits of idx into out[0..len), most significant first.
void digits(uint64_t idx, uint64_t Q, uint32_t len, uint32_t* out) {
    for (uint32_t i = len; i-- > 0;) {
        out[i] = static_cast<uint32_t>(idx % Q);
        idx /= Q;
    }
}

// All codewords as flat id rows, in message order.
std::vector<uint32_t> all_codewords(const LrsCode& code, const Evaluator& ev, uint64_t count) {
    std::vector<uint32_t> out(count * code.n);
    std::vector<uint32_t> msg(code.k);
    for (uint64_t i = 0; i < count; ++i) {
        digits(i, code.field_order(), code.k, msg.data());
        ev.evaluate_ids(msg, std::span<uint32_t>(&out[i * code.n], code.n));
    }
    return out;
}

}  // namespace

uint32_t min_distance_exhaustive(const LrsCode& code, uint64_t max_enum) {
    const uint64_t count = checked_pow(code.field_order(), code.k, max_enum, "q^{mk} messages");
    const Evaluator ev(code.pair);
    const BlockRanker ranker(*code.tower, code.ell, code.eta);
    std::vector<uint32_t> msg(code.k), cw(code.n);
    uint32_t best = code.n + 1;
    for (uint64_t i = 1; i < count; ++i) {
        digits(i, code.field_order(), code.k, msg.data());
        ev.evaluate_ids(msg, cw);
        best = std::min(best, ranker.distance(cw.data(), nullptr, best));
    }
    return best;
}

std::string to_string(CenterStrategy s) {
    switch (s) {
        case CenterStrategy::All: return "all";
        case CenterStrategy::Cosets: return "cosets";
        case CenterStrategy::Given: return "given";
    }
    return "?";
}

CenterStrategy parse_strategy(const std::string& s) {
    if (s == "all") return CenterStrategy::All;
    if (s == "cosets") return CenterStrategy::Cosets;
    if (s == "given") return CenterStrategy::Given;
    fail(ErrorKind::InvalidArgument, "unknown center strategy '" + s + "'");
}

ListOracleResult list_size_oracle(const LrsCode& code, uint32_t tau, const OracleOptions& options) {
    if (tau > code.n) fail(ErrorKind::InvalidRadius, "radius must lie in [0, n]");
    const uint64_t Q = code.field_order();
    const uint32_t n = code.n, k = code.k;
    const uint64_t num_codewords = checked_pow(Q, k, options.max_enum, "q^{mk} codewords");

    uint64_t num_centers = 0;
    switch (options.strategy) {
        case CenterStrategy::All: num_centers = checked_pow(Q, n, options.max_enum, "q^{mn} centers"); break;
        case CenterStrategy::Cosets: num_centers = checked_pow(Q, n - k, options.max_enum, "q^{m(n-k)} coset representatives"); break;
        case CenterStrategy::Given:
            num_centers = options.centers.size();
            if (num_centers == 0) fail(ErrorKind::InvalidArgument, "given strategy needs at least one center");
            if (num_centers > options.max_enum) fail(ErrorKind::EnumerationTooLarge, "too many given centers");
            for (const auto& c : options.centers)
                if (c.ell != code.ell || c.eta != code.eta) fail(ErrorKind::ShapeMismatch, "center shape differs from the code");
            break;
    }

    const Evaluator ev(code.pair);
    const std::vector<uint32_t> codewords = all_codewords(code, ev, num_codewords);

    auto center_ids = [&](uint64_t idx, uint32_t* out, std::vector<uint32_t>& tmp) {
        switch (options.strategy) {
            case CenterStrategy::All: digits(idx, Q, n, out); break;
            case CenterStrategy::Cosets:
                // Coset representative ev(h) with h supported on degrees k..n-1.
                tmp.assign(n, 0);
                digits(idx, Q, n - k, tmp.data() + k);
                ev.evaluate_ids(tmp, std::span<uint32_t>(out, n));
                break;
            case CenterStrategy::Given:
                for (uint32_t i = 0; i < n; ++i) out[i] = options.centers[idx].data[i].id();
                break;
        }
    };

    struct Best {
        uint64_t count = 0;
        uint64_t index = UINT64_MAX;
    };
    auto better = [](const Best& a, const Best& b) {
        return a.count > b.count || (a.count == b.count && a.index < b.index);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::min<uint64_t>(num_centers, 64))));
    std::vector<Best> partial(workers);
    auto work = [&](unsigned w) {
        const BlockRanker ranker(*code.tower, code.ell, code.eta);
        std::vector<uint32_t> center(n), tmp;
        Best best;
        for (uint64_t idx = w; idx < num_centers; idx += workers) {
            center_ids(idx, center.data(), tmp);
            uint64_t count = 0;
            for (uint64_t c = 0; c < num_codewords; ++c)
                if (ranker.distance(center.data(), &codewords[c * n], tau) <= tau) ++count;
            const Best cand{count, idx};
            if (better(cand, best)) best = cand;
        }
        partial[w] = best;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    Best best;
    for (const auto& b : partial)
        if (better(b, best)) best = b;

    ListOracleResult result;
    result.max_list = best.count;
    result.argmax_index = best.index;
    result.radius = tau;
    result.centers_examined = num_centers;
    result.strategy = options.strategy;
    result.exact = options.strategy != CenterStrategy::Given;

    std::vector<uint32_t> center(n), tmp;
    center_ids(best.index, center.data(), tmp);
    std::vector<FElem> cdata;
    for (uint32_t v : center) cdata.emplace_back(*code.tower, v);
    result.argmax_center = BlockVector(code.ell, code.eta, std::move(cdata));

    const BlockRanker ranker(*code.tower, code.ell, code.eta);
    for (uint64_t c = 0; c < num_codewords; ++c)
        if (ranker.distance(center.data(), &codewords[c * n], tau) <= tau)
            result.codewords_in_ball.push_back(message_from_index(code, c));
    return result;
}

bool recheck_oracle_result(const LrsCode& code, const ListOracleResult& result) {
    if (result.codewords_in_ball.size() != result.max_list) return false;
    for (const auto& f : result.codewords_in_ball)
        if (sum_rank_dist(encode(code, f), result.argmax_center) > result.radius) return false;
    return true;
}

bool CodeCertificate::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

CodeCertificate validate_code(const LrsCode& code) {
    CodeCertificate cert;
    const uint32_t m = code.tower->m();
    const uint64_t q = code.tower->p();
    auto add = [&](std::string name, bool ok, std::string detail) {
        cert.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    add("n = ell * eta", code.n == code.ell * code.eta && code.pair.n() == code.n,
        "n=" + std::to_string(code.n) + " ell=" + std::to_string(code.ell) + " eta=" + std::to_string(code.eta));
    add("1 <= k <= n", code.k >= 1 && code.k <= code.n, "k=" + std::to_string(code.k));
    add("eta <= m", code.eta <= m, "eta=" + std::to_string(code.eta) + " m=" + std::to_string(m));
    add("ell < q", code.ell < q, "ell=" + std::to_string(code.ell) + " q=" + std::to_string(q));
    add("gcd(s, m) = 1", std::gcd(code.sigma.s(), m) == 1, "s=" + std::to_string(code.sigma.s()));
    const bool same_sigma = code.pair.sigma == code.sigma;
    add("pair uses the code automorphism", same_sigma, "");
    const EvalPairCheck pc = check_eval_pair(code.pair);
    add("a entries nonzero", pc.a_nonzero, "");
    add("a entries pairwise non-conjugate", pc.a_distinct_classes, "distinct norms w.r.t. sigma");
    add("beta linearly independent over F_q", pc.beta_independent, "");
    return cert;
}

}  // namespace lrs
