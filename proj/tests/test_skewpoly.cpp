#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lrs/skewpoly.hpp"
#include "oracles.hpp"

using namespace lrs;

namespace {

struct Ring {
    TowerPtr t;
    Automorphism sigma;
    Ring(uint32_t p, uint32_t m, uint32_t s = 1) : t(build_tower(p, m)), sigma(t, s % m) {}
    FElem e(uint32_t id) const { return FElem(*t, id); }
    SkewPoly poly(std::vector<uint32_t> ids) const {
        std::vector<FElem> c;
        for (auto id : ids) c.push_back(e(id));
        return SkewPoly(sigma, c);
    }
};

SkewPoly random_poly(const Ring& r, uint32_t max_deg, std::mt19937_64& rng) {
    std::vector<FElem> c;
    for (uint32_t i = 0; i <= max_deg; ++i) c.push_back(r.e(static_cast<uint32_t>(rng() % r.t->order())));
    return SkewPoly(r.sigma, c);
}

// Σ f_i σ^i(β) N_i(a), written out from scratch.
FElem naive_eval(const SkewPoly& f, FElem beta, FElem a) {
    const auto& s = f.sigma();
    FElem out = f.tower().zero();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        FElem Ni = f.tower().one();
        for (std::size_t j = 0; j < i; ++j) Ni *= s.apply_n(a, static_cast<uint32_t>(j));
        out += f.coeffs()[i] * s.apply_n(beta, static_cast<uint32_t>(i)) * Ni;
    }
    return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(SkewPoly, TrailingZerosTrimmed) {
    Ring r(3, 2);
    EXPECT_EQ(r.poly({1, 0, 0}).degree(), 0);
    EXPECT_TRUE(r.poly({0, 0}).is_zero());
    EXPECT_EQ(r.poly({}).degree(), -1);
}

TEST(SkewAdd, IdentitiesAndCancellation) {
    Ring r(2, 2);
    const FElem w = r.t->z();
    const SkewPoly f = r.poly({3, 2, 1});
    EXPECT_EQ(f + SkewPoly(r.sigma), f);
    EXPECT_TRUE((f + (-f)).is_zero());
    const SkewPoly x_plus_w({r.sigma, {w, r.t->one()}}), x_plus_1({r.sigma, {r.t->one(), r.t->one()}});
    const SkewPoly sum = x_plus_w + x_plus_1;
    ASSERT_EQ(sum.degree(), 0);
    EXPECT_EQ(sum.coeff(0), w + r.t->one());
}

TEST(SkewMul, UnitAndTwist) {
    Ring r(2, 2);
    const FElem w = r.t->z();
    const SkewPoly one = SkewPoly::constant(r.sigma, r.t->one());
    const SkewPoly f = r.poly({3, 2, 1});
    EXPECT_EQ(f * one, f);
    EXPECT_EQ(one * f, f);
    const SkewPoly x = SkewPoly::monomial(r.sigma, r.t->one(), 1);
    const SkewPoly cw = SkewPoly::constant(r.sigma, w);
    EXPECT_EQ(x * cw, SkewPoly::monomial(r.sigma, w + r.t->one(), 1));
    EXPECT_NE(x * cw, cw * x);
}

TEST(SkewMul, RingAxiomsRandom) {
    Ring r(3, 2);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_poly(r, 4, rng), g = random_poly(r, 4, rng), h = random_poly(r, 4, rng);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f + g) * h, f * h + g * h);
        if (!f.is_zero() && !g.is_zero()) EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
    }
}

TEST(SkewMul, RingMismatch) {
    Ring a(2, 3, 1), b(2, 3, 2);
    EXPECT_EQ(kind_of([&] { (void)(a.poly({1, 1}) * b.poly({1, 1})); }), ErrorKind::RingMismatch);
}

TEST(OpEval, ConstantsAndX) {
    Ring r(3, 2);
    for (uint32_t a = 1; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b) {
            EXPECT_EQ(op_eval(r.poly({4}), r.e(b), r.e(a)), r.e(4) * r.e(b));
            EXPECT_EQ(op_eval(SkewPoly::monomial(r.sigma, r.t->one(), 1), r.e(b), r.e(a)), r.sigma(r.e(b)) * r.e(a));
        }
    EXPECT_EQ(kind_of([&] { op_eval(r.poly({1}), r.e(1), r.e(0)); }), ErrorKind::ZeroEvaluator);
}

TEST(OpEval, MatchesNaiveAndIsLinearInBeta) {
    Ring r(2, 4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_poly(r, 5, rng);
        const FElem a = r.e(1 + rng() % 15), b1 = r.e(rng() % 16), b2 = r.e(rng() % 16);
        EXPECT_EQ(op_eval(f, b1, a), naive_eval(f, b1, a));
        EXPECT_EQ(op_eval(f, b1 + b2, a), op_eval(f, b1, a) + op_eval(f, b2, a));
    }
    Ring r5(5, 2);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_poly(r5, 3, rng);
        const FElem a = r5.e(1 + rng() % 24), b1 = r5.e(rng() % 25), b2 = r5.e(rng() % 25);
        const FElem lambda = r5.t->scalar(static_cast<uint32_t>(rng() % 5));
        EXPECT_EQ(op_eval(f, b1 + lambda * b2, a), op_eval(f, b1, a) + lambda * op_eval(f, b2, a));
    }
}

TEST(EvalPair, Defaults) {
    Ring r(3, 2);
    const EvalPair single = make_eval_pair(r.t, r.sigma, 1, 2);
    EXPECT_EQ(single.a.size(), 1u);
    EXPECT_EQ(oracle::vector_rank(single.beta), 2u);
    const EvalPair two = make_eval_pair(r.t, r.sigma, 2, 2);
    EXPECT_NE(norm(r.sigma, two.a[0]), norm(r.sigma, two.a[1]));
    EXPECT_TRUE(check_eval_pair(two).ok());
    EXPECT_EQ(kind_of([&] { make_eval_pair(r.t, r.sigma, 3, 2); }), ErrorKind::TooManyBlocks);
    EXPECT_EQ(kind_of([&] { make_eval_pair(r.t, r.sigma, 1, 3); }), ErrorKind::BlockTooLong);
}

TEST(EvalPair, CheckDetectsViolations) {
    Ring r(3, 2);
    EvalPair p = make_eval_pair(r.t, r.sigma, 2, 2);
    EvalPair same_class = p;
    same_class.a[1] = r.sigma(p.a[0]) * r.e(2) / r.e(2) * r.sigma(r.e(3)) / r.e(3);
    EXPECT_FALSE(check_eval_pair(same_class).a_distinct_classes);
    EvalPair repeated = p;
    repeated.beta[1] = repeated.beta[0];
    EXPECT_FALSE(check_eval_pair(repeated).beta_independent);
    EvalPair zero = p;
    zero.a[0] = r.t->zero();
    EXPECT_FALSE(check_eval_pair(zero).a_nonzero);
}

TEST(MultiEval, LayoutAndZero) {
    Ring r(3, 2);
    const EvalPair p = make_eval_pair(r.t, r.sigma, 2, 2);
    const SkewPoly f = r.poly({1, 5, 7});
    const auto v = multi_eval(f, p);
    ASSERT_EQ(v.size(), 4u);
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j) EXPECT_EQ(v[i * 2 + j], naive_eval(f, p.beta[j], p.a[i]));
    for (const auto& x : multi_eval(SkewPoly(r.sigma), p)) EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(kind_of([&] { multi_eval(r.poly({1, 1, 1, 1, 1}), p); }), ErrorKind::DegreeTooLarge);
}

TEST(MultiEval, BijectiveSmall) {
    Ring r(3, 1);
    const EvalPair p = make_eval_pair(r.t, r.sigma, 2, 1);
    std::set<std::vector<uint32_t>> images;
    for (uint32_t a = 0; a < 3; ++a)
        for (uint32_t b = 0; b < 3; ++b) {
            std::vector<uint32_t> ids;
            for (auto x : multi_eval(r.poly({a, b}), p)) ids.push_back(x.id());
            images.insert(ids);
        }
    EXPECT_EQ(images.size(), 9u);
}

TEST(MultiEval, WeightAtLeastNMinusDegree) {
    Ring r(3, 2);
    const EvalPair p = make_eval_pair(r.t, r.sigma, 2, 2);
    for (uint32_t idx = 1; idx < 729; ++idx) {
        const SkewPoly f = r.poly({idx % 9, idx / 9 % 9, idx / 81});
        EXPECT_GE(static_cast<int>(oracle::sum_rank(multi_eval(f, p), 2)), 4 - f.degree());
    }
}

TEST(Evaluator, PreimageInvertsEvaluation) {
    Ring r(2, 4);
    const EvalPair p = make_eval_pair(r.t, r.sigma, 1, 4);
    const Evaluator ev(p);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_poly(r, 3, rng);
        const auto v = ev.evaluate(f);
        EXPECT_EQ(v, multi_eval(f, p));
        EXPECT_EQ(ev.preimage(v), f);
    }
}

TEST(Evaluator, NonUnitSigmaPower) {
    Ring r(2, 6, 5);
    const EvalPair p = make_eval_pair(r.t, r.sigma, 1, 6);
    EXPECT_TRUE(check_eval_pair(p).ok());
    const Evaluator ev(p);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_poly(r, 5, rng);
        EXPECT_EQ(ev.preimage(ev.evaluate(f)), f);
    }
}
