#include "lrs/skewpoly.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lrs {

namespace {

void require_same_ring(const SkewPoly& f, const SkewPoly& g) {
    if (!(f.sigma() == g.sigma())) fail(ErrorKind::RingMismatch, "skew polynomials over different rings");
}

void trim(std::vector<FElem>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

SkewPoly::SkewPoly(Automorphism sigma, std::vector<FElem> coeffs) : sigma_(std::move(sigma)), coeffs_(std::move(coeffs)) {
    for (FElem c : coeffs_)
        if (c.tower() != &sigma_.tower()) fail(ErrorKind::TowerMismatch, "coefficient outside the ring's field");
    trim(coeffs_);
}

SkewPoly SkewPoly::constant(Automorphism sigma, FElem c) { return SkewPoly(std::move(sigma), {c}); }

SkewPoly SkewPoly::monomial(Automorphism sigma, FElem c, uint32_t d) {
    std::vector<FElem> coeffs(d + 1, sigma.tower().zero());
    coeffs[d] = c;
    return SkewPoly(std::move(sigma), std::move(coeffs));
}

FElem SkewPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : tower().zero(); }

std::vector<uint32_t> SkewPoly::support() const {
    std::vector<uint32_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.push_back(static_cast<uint32_t>(i));
    return out;
}

SkewPoly SkewPoly::operator-() const {
    std::vector<FElem> c(coeffs_);
    for (auto& v : c) v = -v;
    return SkewPoly(sigma_, std::move(c));
}

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    const std::size_t len = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<FElem> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = f.coeff(i) + g.coeff(i);
    return SkewPoly(f.sigma(), std::move(c));
}

SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g) { return skew_add(f, -g); }

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly(f.sigma());
    const auto& sigma = f.sigma();
    std::vector<FElem> c(f.coeffs().size() + g.coeffs().size() - 1, f.tower().zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const FElem fi = f.coeffs()[i];
        if (fi.is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] += fi * sigma.apply_n(g.coeffs()[j], static_cast<uint32_t>(i));
    }
    return SkewPoly(sigma, std::move(c));
}

FElem op_eval(const SkewPoly& f, FElem beta, FElem a) {
    const auto& sigma = f.sigma();
    if (beta.tower() != &sigma.tower() || a.tower() != &sigma.tower())
        fail(ErrorKind::TowerMismatch, "evaluation point outside the ring's field");
    if (a.is_zero()) fail(ErrorKind::ZeroEvaluator, "evaluator a must be nonzero");
    FElem sum = sigma.tower().zero();
    FElem sigma_beta = beta;          // σ^i(β)
    FElem norm_i = sigma.tower().one();  // N_i(a)
    FElem sigma_a = a;                // σ^i(a)
    for (FElem fi : f.coeffs()) {
        sum += fi * sigma_beta * norm_i;
        sigma_beta = sigma(sigma_beta);
        norm_i = norm_i * sigma_a;
        sigma_a = sigma(sigma_a);
    }
    return sum;
}

EvalPairCheck check_eval_pair(const EvalPair& pair) {
    EvalPairCheck out;
    const auto& sigma = pair.sigma;
    out.a_nonzero = std::none_of(pair.a.begin(), pair.a.end(), [](FElem x) { return x.is_zero(); });
    if (out.a_nonzero) {
        std::set<uint32_t> norms;
        for (FElem x : pair.a) norms.insert(norm(sigma, x).id());
        out.a_distinct_classes = norms.size() == pair.a.size();
    }
    const uint32_t g = sigma.fixed_degree();
    std::vector<FElem> mult;
    FElem theta = subfield_generator(sigma.tower(), g), cur = sigma.tower().one();
    for (uint32_t j = 0; j < g; ++j, cur = cur * theta) mult.push_back(cur);
    out.beta_independent = closure_dimension(pair.beta, mult) == g * pair.beta.size();
    return out;
}

EvalPair make_eval_pair(const TowerPtr& tower, const Automorphism& sigma, uint32_t ell, uint32_t eta) {
    if (sigma.tower_ptr().get() != tower.get()) fail(ErrorKind::TowerMismatch, "automorphism over another tower");
    const uint64_t q = sigma.fixed_field_size();
    if (ell == 0) fail(ErrorKind::InvalidArgument, "need at least one block");
    if (ell >= q)
        fail(ErrorKind::TooManyBlocks, "ell = " + std::to_string(ell) + " must be below the fixed field size " +
                                           std::to_string(q));
    if (eta == 0 || eta > tower->m() / sigma.fixed_degree())
        fail(ErrorKind::BlockTooLong, "eta = " + std::to_string(eta) + " exceeds the extension degree");
    const auto classes = conjugacy_classes(sigma);
    EvalPair pair{sigma, {}, {}};
    for (uint32_t i = 0; i < ell; ++i) pair.a.push_back(classes[i].members.front());
    FElem cur = tower->one();
    for (uint32_t j = 0; j < eta; ++j, cur = cur * tower->z()) pair.beta.push_back(cur);
    if (!check_eval_pair(pair).ok()) fail(ErrorKind::InvariantViolation, "default evaluation pair failed its checks");
    return pair;
}

std::vector<FElem> multi_eval(const SkewPoly& f, const EvalPair& pair) {
    const uint32_t n = pair.n();
    if (f.degree() >= static_cast<int>(n))
        fail(ErrorKind::DegreeTooLarge, "deg f = " + std::to_string(f.degree()) + " is not below n = " + std::to_string(n));
    if (!(f.sigma() == pair.sigma)) fail(ErrorKind::RingMismatch, "polynomial and evaluation pair use different automorphisms");
    std::vector<FElem> out;
    out.reserve(n);
    for (FElem a : pair.a)
        for (FElem b : pair.beta) out.push_back(op_eval(f, b, a));
    return out;
}

Evaluator::Evaluator(EvalPair pair) : pair_(std::move(pair)), n_(pair_.n()) {
    const auto& t = pair_.sigma.tower();
    const auto& sigma = pair_.sigma;
    matrix_.assign(std::size_t{n_} * n_, 0);
    uint32_t row = 0;
    for (FElem a : pair_.a) {
        for (FElem b : pair_.beta) {
            FElem sb = b, norm_i = t.one(), sa = a;
            for (uint32_t i = 0; i < n_; ++i) {
                matrix_[std::size_t{row} * n_ + i] = (sb * norm_i).id();
                sb = sigma(sb);
                norm_i = norm_i * sa;
                sa = sigma(sa);
            }
            ++row;
        }
    }

    // Gauss-Jordan on [M | I].
    const uint32_t w = 2 * n_;
    std::vector<uint32_t> aug(std::size_t{n_} * w, 0);
    for (uint32_t r = 0; r < n_; ++r) {
        std::copy_n(&matrix_[std::size_t{r} * n_], n_, &aug[std::size_t{r} * w]);
        aug[std::size_t{r} * w + n_ + r] = t.one().id();
    }
    for (uint32_t c = 0; c < n_; ++c) {
        uint32_t piv = c;
        while (piv < n_ && aug[std::size_t{piv} * w + c] == 0) ++piv;
        if (piv == n_) fail(ErrorKind::InvariantViolation, "evaluation map is singular; (a, beta) is not an evaluation pair");
        if (piv != c)
            for (uint32_t j = 0; j < w; ++j) std::swap(aug[std::size_t{piv} * w + j], aug[std::size_t{c} * w + j]);
        const uint32_t pinv = t.inv(aug[std::size_t{c} * w + c]);
        for (uint32_t j = 0; j < w; ++j) aug[std::size_t{c} * w + j] = t.mul(aug[std::size_t{c} * w + j], pinv);
        for (uint32_t r = 0; r < n_; ++r) {
            if (r == c) continue;
            const uint32_t factor = aug[std::size_t{r} * w + c];
            if (!factor) continue;
            for (uint32_t j = 0; j < w; ++j)
                aug[std::size_t{r} * w + j] = t.sub(aug[std::size_t{r} * w + j], t.mul(factor, aug[std::size_t{c} * w + j]));
        }
    }
    // (M^{-1})[i][r]
    inverse_.assign(std::size_t{n_} * n_, 0);
    for (uint32_t r = 0; r < n_; ++r)
        for (uint32_t j = 0; j < n_; ++j) inverse_[std::size_t{r} * n_ + j] = aug[std::size_t{r} * w + n_ + j];
}

void Evaluator::evaluate_ids(std::span<const uint32_t> coeff_ids, std::span<uint32_t> out) const {
    const auto& t = pair_.sigma.tower();
    for (uint32_t r = 0; r < n_; ++r) {
        uint32_t acc = 0;
        const uint32_t* row = &matrix_[std::size_t{r} * n_];
        for (std::size_t i = 0; i < coeff_ids.size(); ++i)
            if (coeff_ids[i]) acc = t.add(acc, t.mul(row[i], coeff_ids[i]));
        out[r] = acc;
    }
}

std::vector<FElem> Evaluator::evaluate(const SkewPoly& f) const {
    if (f.degree() >= static_cast<int>(n_)) fail(ErrorKind::DegreeTooLarge, "degree not below n");
    if (!(f.sigma() == pair_.sigma)) fail(ErrorKind::RingMismatch, "polynomial and evaluation pair use different automorphisms");
    std::vector<uint32_t> ids(f.coeffs().size()), out(n_);
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = f.coeffs()[i].id();
    evaluate_ids(ids, out);
    std::vector<FElem> res;
    res.reserve(n_);
    for (uint32_t v : out) res.emplace_back(pair_.sigma.tower(), v);
    return res;
}

SkewPoly Evaluator::preimage(std::span<const FElem> v) const {
    if (v.size() != n_) fail(ErrorKind::ShapeMismatch, "vector length must equal n");
    const auto& t = pair_.sigma.tower();
    std::vector<FElem> coeffs(n_, t.zero());
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t acc = 0;
        for (uint32_t r = 0; r < n_; ++r) {
            if (v[r].tower() != &t) fail(ErrorKind::TowerMismatch, "vector entry outside the field");
            acc = t.add(acc, t.mul(inverse_[std::size_t{i} * n_ + r], v[r].id()));
        }
        coeffs[i] = FElem(t, acc);
    }
    return SkewPoly(pair_.sigma, std::move(coeffs));
}

}  // namespace lrs
