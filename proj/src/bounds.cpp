#include "lrs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "lrs/detail/fp_linalg.hpp"

namespace lrs {

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::Theorem1: return "theorem1";
        case BoundKind::Lemma2: return "lemma2";
        case BoundKind::Theorem2: return "theorem2";
        case BoundKind::Corollary4: return "corollary4";
        case BoundKind::Theorem3: return "theorem3";
    }
    return "?";
}

double BoundReport::total_log_q() const { return log_q_value.convert_to<double>() + correction; }

double BoundReport::value() const { return std::pow(static_cast<double>(q), total_log_q()); }

bool BoundReport::at_most(const BigInt& count) const {
    return total_log_q() <= log_q_big(count, static_cast<double>(q)) + kLogTolerance;
}

double log_q_gamma(uint64_t q) { return std::log(gamma_q(static_cast<double>(q))) / std::log(static_cast<double>(q)); }

namespace {

// log_q γ_{q^g}
double log_q_gamma_ext(uint64_t q, uint32_t g) {
    return std::log(gamma_q(std::pow(static_cast<double>(q), g))) / std::log(static_cast<double>(q));
}

}  // namespace

BoundReport lemma2_bound(uint32_t t, uint32_t ell, uint32_t eta, uint32_t m, uint64_t q) {
    if (t > ell * std::min(eta, m)) fail(ErrorKind::WeightTooLarge, "weight exceeds ell * min(eta, m)");
    BoundReport r;
    r.kind = BoundKind::Lemma2;
    r.q = q;
    r.log_q_value = Rational(t) * (eta + m) - Rational(uint64_t{t} * t, ell);
    r.correction = -static_cast<double>(ell) * log_q_gamma(q) - (t % ell ? ell / 4.0 : 0.0);
    r.params = {{"t", t}, {"ell", ell}, {"eta", eta}, {"m", m}, {"q", static_cast<double>(q)}};
    return r;
}

BoundReport theorem1_bound(uint32_t ell, uint32_t eta, uint32_t m, uint64_t q, uint32_t d, uint32_t tau) {
    if (tau >= d) fail(ErrorKind::RadiusNotLessThanD, "tau = " + std::to_string(tau) + " must be below d = " + std::to_string(d));
    if (ell == 0) fail(ErrorKind::InvalidArgument, "ell must be positive");
    BoundReport r;
    r.kind = BoundKind::Theorem1;
    r.q = q;
    r.log_q_value = Rational(m) + Rational(tau) * (m + eta) - Rational(uint64_t{tau} * tau, ell) - Rational(uint64_t{m} * d);
    r.correction = -static_cast<double>(ell) * log_q_gamma(q) - (tau % ell ? ell / 4.0 : 0.0);
    r.params = {{"ell", ell}, {"eta", eta}, {"m", m}, {"q", static_cast<double>(q)}, {"d", d}, {"tau", tau}};
    return r;
}

double corollary1_radius(uint32_t ell, uint32_t m, uint32_t n, uint32_t d, uint64_t q, double eps) {
    const double half = (static_cast<double>(ell) * m + n) / 2.0;
    const double disc = half * half - static_cast<double>(ell) * ell * (0.25 + log_q_gamma(q)) -
                        static_cast<double>(ell) * m * (static_cast<double>(d) - 1.0) - eps * n;
    if (disc < 0) fail(ErrorKind::NegativeDiscriminant, "the radius expression has a negative discriminant");
    return half - std::sqrt(disc);
}

uint64_t corollary2_radius(double R, uint32_t ell, uint64_t n, double eps) {
    if (!(R >= 0.0 && R <= 1.0)) fail(ErrorKind::InvalidArgument, "rate must lie in [0, 1]");
    if (ell == 0) fail(ErrorKind::InvalidArgument, "ell must be positive");
    const long double x = static_cast<long double>(n) * (1.0L - std::sqrt(static_cast<long double>(R)) + eps) / ell;
    // Values within 1e-9 of an integer are treated as that integer.
    const long double nearest = std::nearbyint(x);
    const long double base = std::fabs(x - nearest) < 1e-9L ? nearest : std::floor(x);
    return static_cast<uint64_t>(base + 1) * ell;
}

Corollary3Params corollary3_params(double R, double a, uint64_t q, double eps) {
    Corollary3Params out;
    out.zeta = a * a * (0.25 + log_q_gamma(q));
    if (out.zeta >= R) fail(ErrorKind::ZetaTooLarge, "zeta must be below R");
    const double sr = std::sqrt(R), gap = std::sqrt(R - out.zeta);
    if (eps <= sr - gap) fail(ErrorKind::EpsilonTooSmall, "epsilon must exceed sqrt(R) - sqrt(R - zeta)");
    if (eps >= sr + gap) fail(ErrorKind::EpsilonTooLarge, "epsilon must be below sqrt(R) + sqrt(R - zeta)");
    out.delta = -eps * eps + 2.0 * sr * eps - out.zeta;
    out.b = std::pow(static_cast<double>(q), out.delta / a);
    return out;
}

// ------------------------------------------------------------ witnesses

bool WitnessList::meets_guarantee(uint64_t field_order) const {
    return BigInt(messages.size()) * ipow(field_order, s) >= BigInt(set_size);
}

WitnessList pigeonhole_witness(const LrsCode& code, const std::vector<SkewPoly>& S, uint32_t tau) {
    if (tau >= code.d()) fail(ErrorKind::RadiusNotLessThanD, "tau must be below d = n - k + 1");
    if (S.empty()) fail(ErrorKind::InvalidArgument, "S must not be empty");
    const Evaluator ev(code.pair);
    const BlockRanker ranker(*code.tower, code.ell, code.eta);
    const uint32_t n = code.n, k = code.k;

    std::map<std::vector<uint32_t>, std::vector<std::size_t>> classes;
    std::vector<bool> used(n, false);
    std::vector<uint32_t> ids, out(n);
    for (std::size_t idx = 0; idx < S.size(); ++idx) {
        const SkewPoly& f = S[idx];
        if (!(f.sigma() == code.sigma)) fail(ErrorKind::RingMismatch, "member of S over a different ring");
        if (f.degree() >= static_cast<int>(n)) fail(ErrorKind::DegreeTooLarge, "member of S has degree >= n");
        ids.assign(n, 0);
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) ids[i] = f.coeffs()[i].id();
        ev.evaluate_ids(ids, out);
        if (ranker.distance(out.data(), nullptr, tau) > tau)
            fail(ErrorKind::WeightViolation, "member " + std::to_string(idx) + " of S has weight above tau");
        for (uint32_t i = k; i < n; ++i)
            if (ids[i]) used[i] = true;
        classes[std::vector<uint32_t>(ids.begin() + k, ids.end())].push_back(idx);
    }

    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [key, members] : classes)
        if (!best || members.size() > best->size()) best = &members;

    WitnessList w;
    w.radius = tau;
    w.set_size = S.size();
    w.s = static_cast<uint32_t>(std::count(used.begin(), used.end(), true));
    w.num_classes = classes.size();
    const SkewPoly& f1 = S[best->front()];
    w.center = BlockVector(code.ell, code.eta, multi_eval(f1, code.pair));
    for (std::size_t idx : *best) w.messages.push_back(f1 - S[idx]);
    return w;
}

bool verify_witness(const LrsCode& code, const WitnessList& w) {
    for (const auto& f : w.messages) {
        if (f.degree() >= static_cast<int>(code.k)) return false;
        if (sum_rank_dist(encode(code, f), w.center) > w.radius) return false;
    }
    return true;
}

namespace {

std::vector<uint32_t> theta_power_ids(const FieldTower& t, uint32_t g) {
    const FElem theta = subfield_generator(t, g);
    std::vector<uint32_t> out;
    FElem cur = t.one();
    for (uint32_t j = 0; j < g; ++j, cur = cur * theta) out.push_back(cur.id());
    return out;
}

uint32_t block_rank_ids(const FieldTower& t, const uint32_t* ids, uint32_t len, const std::vector<uint32_t>& thetas,
                        std::vector<uint32_t>& scratch) {
    const uint32_t m = t.m();
    const std::size_t g = thetas.size();
    scratch.resize(std::size_t{len} * g * m);
    std::size_t rows = 0;
    for (uint32_t i = 0; i < len; ++i) {
        if (!ids[i]) continue;
        for (uint32_t th : thetas) t.coords_into(t.mul(ids[i], th), &scratch[rows++ * m]);
    }
    if (!rows) return 0;
    return detail::rank_mod_p(std::span<uint32_t>(scratch.data(), rows * m), m, t.p()) / static_cast<uint32_t>(g);
}

}  // namespace

std::vector<std::vector<uint32_t>> low_weight_vectors(const FieldTower& tower, uint32_t ell, uint32_t eta, uint32_t g,
                                                      uint32_t max_weight, uint64_t max_enum) {
    if (g == 0 || tower.m() % g) fail(ErrorKind::NotADivisor, std::to_string(g) + " does not divide m");
    const uint64_t Q = tower.order();
    const uint64_t per_block = checked_pow(Q, eta, max_enum, "block vectors");
    const auto thetas = theta_power_ids(tower, g);
    const uint32_t max_rank = std::min(eta, tower.m() / g);
    std::vector<std::vector<std::vector<uint32_t>>> buckets(max_rank + 1);
    std::vector<uint32_t> block(eta), scratch;
    for (uint64_t idx = 0; idx < per_block; ++idx) {
        uint64_t v = idx;
        for (uint32_t j = eta; j-- > 0;) {
            block[j] = static_cast<uint32_t>(v % Q);
            v /= Q;
        }
        const uint32_t r = block_rank_ids(tower, block.data(), eta, thetas, scratch);
        if (r <= max_weight) buckets[r].push_back(block);
    }

    // Size check before materializing.
    std::vector<BigInt> dp(max_weight + 1, 0);
    dp[0] = 1;
    for (uint32_t b = 0; b < ell; ++b) {
        std::vector<BigInt> next(max_weight + 1, 0);
        for (uint32_t w = 0; w <= max_weight; ++w)
            for (uint32_t r = 0; r < buckets.size() && w + r <= max_weight; ++r) next[w + r] += dp[w] * buckets[r].size();
        dp = std::move(next);
    }
    BigInt total = 0;
    for (const auto& x : dp) total += x;
    if (total > max_enum)
        fail(ErrorKind::EnumerationTooLarge, "low-weight ball exceeds the enumeration cap of " + std::to_string(max_enum));

    std::vector<std::vector<uint32_t>> out;
    out.reserve(total.convert_to<std::size_t>());
    std::vector<uint32_t> cur(std::size_t{ell} * eta);
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t b, uint32_t budget) {
        if (b == ell) {
            out.push_back(cur);
            return;
        }
        for (uint32_t r = 0; r < buckets.size() && r <= budget; ++r)
            for (const auto& blk : buckets[r]) {
                std::copy(blk.begin(), blk.end(), cur.begin() + std::size_t{b} * eta);
                rec(b + 1, budget - r);
            }
    };
    rec(0, max_weight);
    return out;
}

std::vector<SkewPoly> weight_ball_preimages(const EvalPair& pair, uint32_t tau, uint64_t max_enum) {
    const FieldTower& t = pair.sigma.tower();
    const Evaluator ev(pair);
    const auto vecs = low_weight_vectors(t, pair.ell(), pair.eta(), pair.sigma.fixed_degree(), tau, max_enum);
    std::vector<SkewPoly> out;
    out.reserve(vecs.size());
    std::vector<FElem> v(pair.n());
    for (const auto& ids : vecs) {
        for (uint32_t i = 0; i < pair.n(); ++i) v[i] = FElem(t, ids[i]);
        out.push_back(ev.preimage(v));
    }
    return out;
}

// ------------------------------------------------------------ sparse polynomials

StructuredBeta build_structured_beta(const TowerPtr& tower, uint32_t g, uint32_t eta) {
    if (g == 0 || tower->m() % g) fail(ErrorKind::NotADivisor, "g must divide m");
    if (eta % g) fail(ErrorKind::NotADivisor, "g must divide eta");
    if (eta > tower->m()) fail(ErrorKind::BlockTooLong, "eta must not exceed m");
    const SubfieldBasis sb = subfield_basis(tower, g);
    StructuredBeta out;
    out.gamma = sb.theta_powers;
    out.alpha.assign(sb.relative_basis.begin(), sb.relative_basis.begin() + eta / g);
    for (FElem al : out.alpha)
        for (FElem ga : out.gamma) out.beta.push_back(al * ga);
    const std::vector<FElem> one{tower->one()};
    if (closure_dimension(out.beta, one) != eta) fail(ErrorKind::IndependenceFailure, "structured beta is not F_q-independent");
    return out;
}

std::vector<FElem> twist_evaluators(const Automorphism& sigma, const std::vector<FElem>& a, uint32_t g) {
    std::vector<FElem> out;
    out.reserve(a.size());
    for (FElem x : a) {
        if (x.is_zero()) fail(ErrorKind::ZeroInput, "evaluators must be nonzero");
        FElem prod = sigma.tower().one(), cur = x;
        for (uint32_t j = 0; j < g; ++j, cur = sigma(cur)) prod = prod * cur;
        out.push_back(prod);
    }
    return out;
}

SkewPoly lift_sparse(const SkewPoly& f, const Automorphism& sigma, uint32_t g, uint32_t n) {
    if (g == 0 || n % g) fail(ErrorKind::NotADivisor, "g must divide n");
    if (!(f.sigma() == sigma.power(g))) fail(ErrorKind::RingMismatch, "f must live over sigma^g");
    if (f.degree() >= static_cast<int>(n / g)) fail(ErrorKind::DegreeTooLarge, "deg f must be below n/g");
    std::vector<FElem> c(f.is_zero() ? 0 : std::size_t(f.degree()) * g + 1, sigma.tower().zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i * g] = f.coeffs()[i];
    return SkewPoly(sigma, std::move(c));
}

StructuredPair make_structured_pair(const TowerPtr& tower, const Automorphism& sigma, std::vector<FElem> a, uint32_t eta,
                                    uint32_t g) {
    StructuredBeta parts = build_structured_beta(tower, g, eta);
    EvalPair outer{sigma, a, parts.beta};
    EvalPair inner{sigma.power(g), twist_evaluators(sigma, a, g), parts.alpha};
    return StructuredPair{g, std::move(outer), std::move(inner), std::move(parts)};
}

StructuredPair make_structured_pair(const TowerPtr& tower, const Automorphism& sigma, uint32_t ell, uint32_t eta,
                                    uint32_t g) {
    return make_structured_pair(tower, sigma, make_eval_pair(tower, sigma, ell, eta).a, eta, g);
}

void require_sparse_preconditions(const StructuredPair& sp, uint32_t tau) {
    const uint32_t m = sp.outer.sigma.tower().m();
    const uint32_t g = sp.g, ell = sp.outer.ell(), eta = sp.outer.eta();
    if (g == 0 || m % g) fail(ErrorKind::PreconditionViolation, "g must divide m");
    if (tau % g) fail(ErrorKind::PreconditionViolation, "g must divide tau");
    if (tau % ell) fail(ErrorKind::PreconditionViolation, "ell must divide tau");
    if (eta != m) fail(ErrorKind::PreconditionViolation, "eta must equal m");
    if (sp.outer.sigma.fixed_degree() != 1) fail(ErrorKind::PreconditionViolation, "sigma must have fixed field F_q");
}

std::vector<SkewPoly> sparse_set_enumerate(const StructuredPair& sp, uint32_t tau, uint64_t max_enum) {
    require_sparse_preconditions(sp, tau);
    const FieldTower& t = sp.outer.sigma.tower();
    const Evaluator inner(sp.inner);
    const auto vecs = low_weight_vectors(t, sp.inner.ell(), sp.inner.eta(), sp.g, tau / sp.g, max_enum);
    std::vector<SkewPoly> out;
    out.reserve(vecs.size());
    std::vector<FElem> v(sp.inner.n());
    for (const auto& ids : vecs) {
        for (uint32_t i = 0; i < sp.inner.n(); ++i) v[i] = FElem(t, ids[i]);
        out.push_back(lift_sparse(inner.preimage(v), sp.outer.sigma, sp.g, sp.outer.n()));
    }
    return out;
}

std::vector<SkewPoly> sparse_set_filter(const StructuredPair& sp, uint32_t tau, uint64_t max_enum) {
    require_sparse_preconditions(sp, tau);
    const FieldTower& t = sp.outer.sigma.tower();
    const uint32_t n = sp.outer.n(), g = sp.g, slots = n / g;
    const uint64_t Q = t.order();
    const uint64_t count = checked_pow(Q, slots, max_enum, "sparse polynomials");
    const Evaluator ev(sp.outer);
    const BlockRanker ranker(t, sp.outer.ell(), sp.outer.eta());
    std::vector<uint32_t> ids(n, 0), img(n);
    std::vector<SkewPoly> out;
    for (uint64_t idx = 0; idx < count; ++idx) {
        uint64_t v = idx;
        for (uint32_t j = slots; j-- > 0;) {
            ids[std::size_t{j} * g] = static_cast<uint32_t>(v % Q);
            v /= Q;
        }
        ev.evaluate_ids(ids, img);
        if (ranker.distance(img.data(), nullptr, tau) > tau) continue;
        std::vector<FElem> c(n);
        for (uint32_t i = 0; i < n; ++i) c[i] = FElem(t, ids[i]);
        out.emplace_back(sp.outer.sigma, std::move(c));
    }
    return out;
}

bool weight_scaling_check(const SkewPoly& f, const StructuredPair& sp) {
    const SkewPoly lifted = lift_sparse(f, sp.outer.sigma, sp.g, sp.outer.n());
    const uint32_t outer_w = sum_rank_weight(BlockVector(sp.outer.ell(), sp.outer.eta(), multi_eval(lifted, sp.outer)), 1);
    const uint32_t inner_w = sum_rank_weight(BlockVector(sp.inner.ell(), sp.inner.eta(), multi_eval(f, sp.inner)), sp.g);
    return outer_w == sp.g * inner_w;
}

BoundReport theorem2_bound(uint32_t ell, uint32_t eta, uint32_t m, uint64_t q, uint32_t g, uint32_t tau) {
    if (g == 0 || m % g || tau % g || tau % ell || eta != m)
        fail(ErrorKind::PreconditionViolation, "needs g | m, g | tau, ell | tau and eta = m");
    BoundReport r;
    r.kind = BoundKind::Theorem2;
    r.q = q;
    r.log_q_value = Rational(tau, g) * (Rational(m + eta) - Rational(tau, ell));
    r.correction = -static_cast<double>(ell) * log_q_gamma_ext(q, g);
    r.params = {{"ell", ell}, {"eta", eta}, {"m", m}, {"q", static_cast<double>(q)}, {"g", g}, {"tau", tau},
                {"ell_divides_tau_over_g", (tau / g) % ell == 0 ? 1.0 : 0.0}};
    return r;
}

BoundReport corollary4_bound(uint32_t ell, uint32_t eta, uint32_t m, uint64_t q, uint32_t g, uint32_t tau, uint32_t k) {
    if (g == 0 || m % g || tau % g || tau % ell || eta != m)
        fail(ErrorKind::PreconditionViolation, "needs g | m, g | tau, ell | tau and eta = m");
    const int64_t n = int64_t{ell} * eta;
    if (!(int64_t{k} > n - 2 * int64_t{tau})) fail(ErrorKind::PreconditionViolation, "needs k > n - 2 tau");
    BoundReport r;
    r.kind = BoundKind::Corollary4;
    r.q = q;
    r.log_q_value = Rational(m) + Rational(tau, g) * (Rational(eta) - Rational(m) - Rational(tau, ell));
    r.correction = -static_cast<double>(ell) * log_q_gamma_ext(q, g);
    r.params = {{"ell", ell}, {"eta", eta}, {"m", m}, {"q", static_cast<double>(q)}, {"g", g}, {"tau", tau}, {"k", k},
                {"ell_divides_tau_over_g", (tau / g) % ell == 0 ? 1.0 : 0.0}};
    return r;
}

// ------------------------------------------------------------ code families

Construction1Instance construction1_instance(const FamilyParams& fp, uint64_t q) {
    const uint32_t ell = fp.ell, C = fp.C, D = fp.D, g = fp.g;
    if (ell == 0 || D == 0 || g == 0) fail(ErrorKind::InvariantViolation, "ell, D and g must be positive");
    if (C % ell) fail(ErrorKind::InvariantViolation, "ell must divide C");
    if (!(uint64_t{C} > std::max<uint64_t>(uint64_t{D} * D, 2 * uint64_t{D})))
        fail(ErrorKind::InvariantViolation, "C must exceed max(D^2, 2D)");
    if (g % ell) fail(ErrorKind::InvariantViolation, "ell must divide g");
    if (!is_prime(q) || q <= ell) fail(ErrorKind::InvariantViolation, "q must be a prime above ell");
    Construction1Instance inst;
    inst.family = fp;
    inst.q = q;
    inst.n = C * g;
    inst.k = inst.n - 2 * D * g + 1;
    inst.m = inst.eta = C * g / ell;
    inst.tau = D * g;
    return inst;
}

Construction1Code construction1_code(const Construction1Instance& inst) {
    const TowerPtr tower = build_tower(static_cast<uint32_t>(inst.q), inst.m);
    const Automorphism sigma(tower, inst.m > 1 ? 1 : 0);
    StructuredPair sp = make_structured_pair(tower, sigma, inst.family.ell, inst.eta, inst.family.g);
    LrsCode code = make_code(sp.outer, inst.k);
    return Construction1Code{inst, std::move(sp), std::move(code)};
}

BoundReport theorem3_bound(const FamilyParams& fp, uint64_t q) {
    const Construction1Instance inst = construction1_instance(fp, q);
    BoundReport r;
    r.kind = BoundKind::Theorem3;
    r.q = q;
    r.log_q_value = Rational(fp.g, fp.ell) * (Rational(fp.C) - Rational(uint64_t{fp.D} * fp.D));
    r.correction = -static_cast<double>(fp.ell) * log_q_gamma_ext(q, fp.g);
    r.params = {{"ell", fp.ell}, {"C", fp.C}, {"D", fp.D}, {"g", fp.g}, {"q", static_cast<double>(q)},
                {"n", inst.n}, {"k", inst.k}, {"m", inst.m}, {"tau", inst.tau}};
    return r;
}

RateSearch minimize_rate(uint32_t ell) {
    if (ell == 0) fail(ErrorKind::InvalidArgument, "ell must be positive");
    RateSearch best;
    best.ell = ell;
    bool found = false;
    for (uint32_t C = ell;; C += ell) {
        if (found && C > 1) {
            // Stop once 1 - 2/√(C-1) > best, i.e. 4 < (1-best)^2 (C-1).
            const Rational gap = Rational(1) - best.rate;
            if (gap > 0 && Rational(4) < gap * gap * (C - 1)) {
                best.stop_C = C;
                break;
            }
        }
        // Largest admissible D gives the smallest rate for this C.
        uint32_t D = 0;
        for (uint32_t cand = 1; uint64_t{cand} * cand < C && 2 * cand < C; ++cand) D = cand;
        if (D == 0) continue;
        const Rational rate = Rational(1) - Rational(2 * D, C);
        if (!found || rate < best.rate) {
            best.rate = rate;
            best.C = C;
            best.D = D;
            found = true;
        }
    }
    return best;
}

std::vector<RegionRow> emit_region_data(const std::vector<double>& R_grid) {
    std::vector<RegionRow> out;
    out.reserve(R_grid.size());
    for (double R : R_grid) {
        if (!(R >= 0.0 && R <= 1.0)) fail(ErrorKind::InvalidArgument, "rates must lie in [0, 1]");
        out.push_back({R, 1.0 - std::sqrt(R), (1.0 - R) / 2.0});
    }
    return out;
}

}  // namespace lrs
