#include "lrs/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "lrs/bounds.hpp"
#include "lrs/detail/fp_linalg.hpp"

namespace lrs {

bool SuiteResult::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> suite_names() { return {"gf", "skewpoly", "sumrank", "lrs", "bounds"}; }

namespace {

using Rng = std::mt19937_64;

FElem random_elem(const FieldTower& t, Rng& rng) {
    return FElem(t, static_cast<uint32_t>(std::uniform_int_distribution<uint32_t>(0, t.order() - 1)(rng)));
}

FElem random_nonzero(const FieldTower& t, Rng& rng) {
    return FElem(t, static_cast<uint32_t>(std::uniform_int_distribution<uint32_t>(1, t.order() - 1)(rng)));
}

SkewPoly random_poly(const Automorphism& sigma, uint32_t max_deg, Rng& rng) {
    std::vector<FElem> c;
    for (uint32_t i = 0; i <= max_deg; ++i) c.push_back(random_elem(sigma.tower(), rng));
    return SkewPoly(sigma, std::move(c));
}

BlockVector random_vector(const FieldTower& t, uint32_t ell, uint32_t eta, Rng& rng) {
    std::vector<FElem> d;
    for (uint32_t i = 0; i < ell * eta; ++i) d.push_back(random_elem(t, rng));
    return BlockVector(ell, eta, std::move(d));
}

// Runs `body` and turns an exception into a failed check.
Check property(std::string name, const std::function<std::string()>& body) {
    try {
        std::string failure = body();
        return {std::move(name), failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {std::move(name), false, e.what()};
    }
}

SuiteResult gf_suite(Rng& rng) {
    SuiteResult r{"gf", {}};
    r.checks.push_back(property("table multiplication matches reference", [] {
        for (auto [p, m] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
            auto t = build_tower(p, m);
            for (uint32_t a = 0; a < t->order(); ++a)
                for (uint32_t b = 0; b < t->order(); ++b)
                    if (t->mul(a, b) != t->mul_reference(a, b)) return std::string("mismatch in F_") + std::to_string(t->order());
        }
        return std::string();
    }));
    r.checks.push_back(property("norm is multiplicative and Galois invariant", [&] {
        for (auto [p, m] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}}) {
            auto t = build_tower(p, m);
            Automorphism sigma(t, 1);
            for (int i = 0; i < 200; ++i) {
                FElem a = random_nonzero(*t, rng), b = random_nonzero(*t, rng);
                if (norm(sigma, a * b) != norm(sigma, a) * norm(sigma, b)) return std::string("multiplicativity");
                if (norm(sigma, sigma(a)) != norm(sigma, a)) return std::string("Galois invariance");
            }
        }
        return std::string();
    }));
    r.checks.push_back(property("conjugacy classes partition the unit group", [] {
        for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 2u}, {2u, 4u}, {3u, 3u}}) {
            auto t = build_tower(p, m);
            Automorphism sigma(t, 1);
            const auto cls = conjugacy_classes(sigma);
            if (cls.size() != p - 1) return std::string("class count");
            for (const auto& c : cls)
                if (c.members.size() != (t->order() - 1) / (p - 1)) return std::string("class size");
        }
        return std::string();
    }));
    r.checks.push_back(property("Hilbert 90 witness exists iff norms agree", [] {
        for (auto [p, m] : {std::pair{3u, 2u}, {2u, 4u}, {2u, 3u}}) {
            auto t = build_tower(p, m);
            Automorphism sigma(t, 1);
            for (uint32_t a = 1; a < t->order(); ++a)
                for (uint32_t b = 1; b < t->order(); ++b) {
                    const FElem x(*t, a), y(*t, b);
                    const auto c = hilbert90_witness(sigma, x, y);
                    if (c.has_value() != (norm(sigma, x) == norm(sigma, y))) return std::string("equivalence broken");
                    if (c && x * *c != y * sigma(*c)) return std::string("witness invalid");
                }
        }
        return std::string();
    }));
    r.checks.push_back(property("Frobenius powers are F_q-linear", [&] {
        auto t = build_tower(5, 3);
        for (uint32_t s = 0; s < 3; ++s) {
            Automorphism psi(t, s);
            for (int i = 0; i < 200; ++i) {
                FElem a = random_elem(*t, rng), b = random_elem(*t, rng);
                FElem lambda = t->scalar(static_cast<uint32_t>(rng() % 5));
                if (psi(a + lambda * b) != psi(a) + lambda * psi(b)) return std::string("linearity");
            }
        }
        return std::string();
    }));
    r.checks.push_back(property("build_tower is deterministic", [] {
        for (auto [p, m] : {std::pair{2u, 5u}, {3u, 4u}, {11u, 2u}})
            if (!(*build_tower(p, m) == *build_tower(p, m))) return std::string("towers differ");
        return std::string();
    }));
    return r;
}

SuiteResult skewpoly_suite(Rng& rng) {
    SuiteResult r{"skewpoly", {}};
    auto t9 = build_tower(3, 2);
    Automorphism s9(t9, 1);
    r.checks.push_back(property("associativity and distributivity", [&] {
        for (int i = 0; i < 100; ++i) {
            auto f = random_poly(s9, 4, rng), g = random_poly(s9, 4, rng), h = random_poly(s9, 4, rng);
            if ((f * g) * h != f * (g * h)) return std::string("associativity");
            if (f * (g + h) != f * g + f * h) return std::string("left distributivity");
            if ((f + g) * h != f * h + g * h) return std::string("right distributivity");
        }
        return std::string();
    }));
    r.checks.push_back(property("degree is additive", [&] {
        for (int i = 0; i < 100; ++i) {
            auto f = random_poly(s9, 4, rng), g = random_poly(s9, 4, rng);
            if (f.is_zero() || g.is_zero()) continue;
            if ((f * g).degree() != f.degree() + g.degree()) return std::string("degree");
        }
        return std::string();
    }));
    r.checks.push_back(property("multi-point evaluation is additive", [&] {
        const EvalPair pair = make_eval_pair(t9, s9, 2, 2);
        for (int i = 0; i < 100; ++i) {
            auto f = random_poly(s9, 3, rng), g = random_poly(s9, 3, rng);
            auto ef = multi_eval(f, pair), eg = multi_eval(g, pair), efg = multi_eval(f + g, pair);
            for (std::size_t j = 0; j < efg.size(); ++j)
                if (efg[j] != ef[j] + eg[j]) return std::string("additivity");
        }
        return std::string();
    }));
    r.checks.push_back(property("evaluation on deg < n is bijective with weight >= n - deg", [&] {
        const EvalPair pair = make_eval_pair(t9, s9, 2, 2);
        const Evaluator ev(pair);
        const BlockRanker ranker(*t9, 2, 2);
        std::set<std::vector<uint32_t>> seen;
        std::vector<uint32_t> c(4), out(4);
        for (uint32_t idx = 0; idx < 6561; ++idx) {
            uint32_t v = idx;
            int deg = -1;
            for (uint32_t j = 0; j < 4; ++j, v /= 9) {
                c[j] = v % 9;
                if (c[j]) deg = static_cast<int>(j);
            }
            ev.evaluate_ids(c, out);
            if (!seen.insert(out).second) return std::string("collision");
            if (deg >= 0 && static_cast<int>(ranker.weight(out.data())) < 4 - deg) return std::string("weight bound");
        }
        return std::string();
    }));
    return r;
}

SuiteResult sumrank_suite(Rng& rng) {
    SuiteResult r{"sumrank", {}};
    r.checks.push_back(property("sum-rank distance is a metric", [&] {
        auto t = build_tower(3, 2);
        for (int i = 0; i < 100; ++i) {
            auto x = random_vector(*t, 2, 2, rng), y = random_vector(*t, 2, 2, rng), z = random_vector(*t, 2, 2, rng);
            if (sum_rank_dist(x, x) != 0) return std::string("identity");
            if (sum_rank_dist(x, y) != sum_rank_dist(y, x)) return std::string("symmetry");
            if (sum_rank_dist(x, z) > sum_rank_dist(x, y) + sum_rank_dist(y, z)) return std::string("triangle");
        }
        return std::string();
    }));
    r.checks.push_back(property("eta = 1 gives the Hamming weight", [&] {
        auto t = build_tower(5, 2);
        for (int i = 0; i < 100; ++i) {
            auto x = random_vector(*t, 6, 1, rng);
            const auto nz = std::count_if(x.data.begin(), x.data.end(), [](FElem e) { return !e.is_zero(); });
            if (sum_rank_weight(x) != static_cast<uint32_t>(nz)) return std::string("Hamming");
        }
        return std::string();
    }));
    r.checks.push_back(property("rank-matrix counts match enumeration", [] {
        for (uint32_t m = 1; m <= 3; ++m)
            for (uint32_t eta = 1; eta <= 3; ++eta) {
                std::vector<uint64_t> hist(4, 0);
                const uint32_t cells = m * eta;
                std::vector<uint32_t> mat(cells);
                for (uint32_t bits = 0; bits < (1u << cells); ++bits) {
                    for (uint32_t c = 0; c < cells; ++c) mat[c] = (bits >> c) & 1;
                    ++hist[detail::rank_mod_p(std::span<uint32_t>(mat), eta, 2)];
                }
                for (uint32_t t = 0; t <= std::min(m, eta); ++t)
                    if (count_rank_matrices(2, m, eta, t) != hist[t]) return std::string("count mismatch");
            }
        return std::string();
    }));
    r.checks.push_back(property("sphere sizes partition the space", [] {
        for (uint64_t q : {2u, 3u, 5u})
            for (uint32_t ell = 1; ell <= 3; ++ell)
                for (uint32_t m = 1; m <= 3; ++m) {
                    BigInt total = 0;
                    for (uint32_t t = 0; t <= ell * m; ++t) total += sphere_size(t, ell, m, m, q).exact;
                    if (total != ipow(q, uint64_t{m} * ell * m)) return std::string("sum mismatch");
                }
        return std::string();
    }));
    r.checks.push_back(property("sphere lower bound never exceeds the exact size", [] {
        for (uint64_t q : {2u, 3u, 5u})
            for (uint32_t ell = 1; ell <= 2; ++ell)
                for (uint32_t m = 1; m <= 3; ++m)
                    for (uint32_t t = 0; t <= ell * m; ++t)
                        if (sphere_lower_bound(t, ell, m, m, q) >
                            log_q_big(sphere_size(t, ell, m, m, q).exact, static_cast<double>(q)) + kLogTolerance)
                            return std::string("bound above exact");
        return std::string();
    }));
    r.checks.push_back(property("subfield ranks are nested", [&] {
        auto t = build_tower(2, 4);
        for (int i = 0; i < 200; ++i) {
            auto x = random_vector(*t, 1, 3, rng);
            const uint32_t r1 = rank_over_subfield(x.data, 1), r2 = rank_over_subfield(x.data, 2),
                           r4 = rank_over_subfield(x.data, 4);
            if (!(r1 >= r2 && r2 >= r4 && r1 <= 2 * r2)) return std::string("chain");
        }
        return std::string();
    }));
    return r;
}

SuiteResult lrs_suite() {
    SuiteResult r{"lrs", {}};
    r.checks.push_back(property("MSRD on q = 3 grid", [] {
        for (uint32_t ell = 1; ell <= 2; ++ell)
            for (uint32_t m = 1; m <= 2; ++m) {
                auto t = build_tower(3, m);
                for (uint32_t k = 1; k <= ell * m; ++k) {
                    const LrsCode code = make_code(t, 1 % m, ell, m, k);
                    if (min_distance_exhaustive(code) != code.d()) return std::string("d != n - k + 1");
                }
            }
        return std::string();
    }));
    r.checks.push_back(property("oracle: unique decoding radius gives list size 1, cosets = all", [] {
        for (uint32_t ell = 1; ell <= 2; ++ell)
            for (uint32_t m = 1; m <= 2; ++m) {
                auto t = build_tower(3, m);
                for (uint32_t k = 1; k <= ell * m; ++k) {
                    const LrsCode code = make_code(t, 1 % m, ell, m, k);
                    const auto res = list_size_oracle(code, (code.d() - 1) / 2);
                    if (res.max_list != 1) return std::string("unique radius");
                    if (!recheck_oracle_result(code, res)) return std::string("not self-certifying");
                    if (code.n * m <= 4) {
                        for (uint32_t tau = 0; tau <= code.n; ++tau) {
                            OracleOptions all;
                            all.strategy = CenterStrategy::All;
                            if (list_size_oracle(code, tau, all).max_list != list_size_oracle(code, tau).max_list)
                                return std::string("cosets != all");
                        }
                    }
                }
            }
        return std::string();
    }));
    return r;
}

SuiteResult bounds_suite() {
    SuiteResult r{"bounds", {}};
    r.checks.push_back(property("list-size bound <= oracle and pigeonhole guarantee (q = 3 grid)", [] {
        for (uint32_t ell = 1; ell <= 2; ++ell)
            for (uint32_t m = 1; m <= 2; ++m) {
                auto t = build_tower(3, m);
                for (uint32_t k = 1; k <= ell * m; ++k) {
                    const LrsCode code = make_code(t, 1 % m, ell, m, k);
                    for (uint32_t tau = 0; tau < code.d(); ++tau) {
                        const auto res = list_size_oracle(code, tau);
                        if (!theorem1_bound(ell, m, m, 3, code.d(), tau).at_most(res.max_list))
                            return std::string("bound above oracle");
                        const auto w = pigeonhole_witness(code, weight_ball_preimages(code.pair, tau), tau);
                        if (!w.meets_guarantee(code.field_order()) || !verify_witness(code, w))
                            return std::string("witness");
                        if (w.size() > res.max_list) return std::string("witness above oracle");
                    }
                }
            }
        return std::string();
    }));
    r.checks.push_back(property("weight scaling and sparse cardinality (q = 2, m = 4, g = 2)", [] {
        auto t = build_tower(2, 4);
        Automorphism sigma(t, 1);
        const auto sp = make_structured_pair(t, sigma, 1, 4, 2);
        for (uint32_t idx = 0; idx < 256; ++idx) {
            const SkewPoly f(sigma.power(2), {FElem(*t, idx % 16), FElem(*t, idx / 16)});
            if (!weight_scaling_check(f, sp)) return std::string("weight scaling");
        }
        for (uint32_t tau : {0u, 2u, 4u}) {
            auto a = sparse_set_enumerate(sp, tau), b = sparse_set_filter(sp, tau);
            if (a.size() != b.size()) return std::string("enumerate vs filter");
            if (!theorem2_bound(1, 4, 4, 2, 2, tau).at_most(a.size())) return std::string("sparse set below its lower bound");
        }
        return std::string();
    }));
    r.checks.push_back(property("dense sparse set equals the weight ball", [] {
        auto t = build_tower(3, 2);
        Automorphism sigma(t, 1);
        const auto sp = make_structured_pair(t, sigma, 1, 2, 1);
        for (uint32_t tau = 0; tau <= 2; ++tau) {
            BigInt expected = 0;
            for (uint32_t w = 0; w <= tau; ++w) expected += sphere_size(w, 1, 2, 2, 3).exact;
            if (BigInt(sparse_set_enumerate(sp, tau).size()) != expected) return std::string("cardinality");
        }
        return std::string();
    }));
    r.checks.push_back(property("rate search is minimal within its stopping bound", [] {
        for (uint32_t ell = 1; ell <= 20; ++ell) {
            const RateSearch best = minimize_rate(ell);
            for (uint32_t C = ell; C < best.stop_C; C += ell)
                for (uint32_t D = 1; uint64_t{D} * D < C && 2 * D < C; ++D)
                    if (Rational(1) - Rational(2 * D, C) < best.rate) return std::string("better pair found");
        }
        return std::string();
    }));
    r.checks.push_back(property("family instances are valid codes", [] {
        for (auto [fp, q] : {std::pair{FamilyParams{1, 3, 1, 1}, 2ull}, {FamilyParams{1, 3, 1, 2}, 2ull},
                             {FamilyParams{2, 4, 1, 2}, 3ull}, {FamilyParams{1, 5, 2, 1}, 5ull}}) {
            const auto c = construction1_code(construction1_instance(fp, q));
            if (!validate_code(c.code).ok()) return std::string("invalid code");
            require_sparse_preconditions(c.pair, c.instance.tau);
        }
        return std::string();
    }));
    return r;
}

}  // namespace

std::vector<SuiteResult> run_suites(const std::string& name, uint64_t seed) {
    Rng rng(seed);
    std::vector<SuiteResult> out;
    const bool all = name == "all";
    bool matched = all;
    if (all || name == "gf") out.push_back(gf_suite(rng)), matched = true;
    if (all || name == "skewpoly") out.push_back(skewpoly_suite(rng)), matched = true;
    if (all || name == "sumrank") out.push_back(sumrank_suite(rng)), matched = true;
    if (all || name == "lrs") out.push_back(lrs_suite()), matched = true;
    if (all || name == "bounds") out.push_back(bounds_suite()), matched = true;
    if (!matched) fail(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
    return out;
}

}  // namespace lrs
