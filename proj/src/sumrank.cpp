#include "lrs/sumrank.hpp"

#include <cmath>
#include <string>

#include "lrs/detail/fp_linalg.hpp"

namespace lrs {

BlockVector::BlockVector(uint32_t ell_, uint32_t eta_, std::vector<FElem> data_)
    : ell(ell_), eta(eta_), data(std::move(data_)) {
    if (data.size() != std::size_t{ell} * eta) fail(ErrorKind::ShapeMismatch, "block vector length must be ell * eta");
}

namespace {

void require_same_shape(const BlockVector& x, const BlockVector& y) {
    if (x.ell != y.ell || x.eta != y.eta) fail(ErrorKind::ShapeMismatch, "block vectors have different shapes");
}

}  // namespace

BlockVector operator-(const BlockVector& x, const BlockVector& y) {
    require_same_shape(x, y);
    std::vector<FElem> d(x.data.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = x.data[i] - y.data[i];
    return BlockVector(x.ell, x.eta, std::move(d));
}

BlockVector operator+(const BlockVector& x, const BlockVector& y) {
    require_same_shape(x, y);
    std::vector<FElem> d(x.data.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = x.data[i] + y.data[i];
    return BlockVector(x.ell, x.eta, std::move(d));
}

uint32_t rank_over_subfield(std::span<const FElem> v, uint32_t g) {
    const FElem* first = nullptr;
    for (const auto& e : v)
        if (!e.is_zero()) {
            first = &e;
            break;
        }
    if (first == nullptr) {
        if (!v.empty() && v.front().tower() && (g == 0 || v.front().tower()->m() % g))
            fail(ErrorKind::NotADivisor, std::to_string(g) + " does not divide m");
        return 0;
    }
    const FieldTower& t = *first->tower();
    const FElem theta = subfield_generator(t, g);
    std::vector<FElem> mult;
    FElem cur = t.one();
    for (uint32_t j = 0; j < g; ++j, cur = cur * theta) mult.push_back(cur);
    return closure_dimension(v, mult) / g;
}

uint32_t sum_rank_weight(const BlockVector& x, uint32_t g) {
    uint32_t w = 0;
    for (uint32_t i = 0; i < x.ell; ++i) w += rank_over_subfield(x.block(i), g);
    return w;
}

uint32_t sum_rank_dist(const BlockVector& x, const BlockVector& y) { return sum_rank_weight(x - y, 1); }

BigInt ipow(uint64_t base, uint64_t e) {
    BigInt out = 1, b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

BigInt count_rank_matrices(uint64_t q, uint32_t m, uint32_t eta, uint32_t t) {
    if (t > std::max(m, eta))
        fail(ErrorKind::RankTooLarge, "rank " + std::to_string(t) + " exceeds both matrix dimensions");
    if (t > std::min(m, eta)) return 0;
    BigInt num = 1, den = 1;
    const BigInt qm = ipow(q, m), qe = ipow(q, eta), qt = ipow(q, t);
    BigInt qi = 1;
    for (uint32_t i = 0; i < t; ++i) {
        num *= (qm - qi) * (qe - qi);
        den *= qt - qi;
        qi *= q;
    }
    return num / den;
}

double gamma_q(double q) {
    double prod = 1.0;
    double qi = 1.0;
    for (int i = 1; i < 4096; ++i) {
        qi /= q;
        if (qi < 1e-18) break;
        prod /= (1.0 - qi);
    }
    return prod;
}

namespace {

// Σ over compositions of t into `parts` parts each ≤ cap of ∏ counts[t_i].
BigInt composition_sum(const std::vector<BigInt>& counts, uint32_t parts, uint32_t t) {
    // dp[w] = number over the blocks processed so far of total weight w
    std::vector<BigInt> dp(t + 1, 0);
    dp[0] = 1;
    for (uint32_t b = 0; b < parts; ++b) {
        std::vector<BigInt> next(t + 1, 0);
        for (uint32_t w = 0; w <= t; ++w) {
            if (dp[w] == 0) continue;
            for (uint32_t ti = 0; ti < counts.size() && w + ti <= t; ++ti) next[w + ti] += dp[w] * counts[ti];
        }
        dp = std::move(next);
    }
    return dp[t];
}

}  // namespace

SphereCount sphere_size(uint32_t t, uint32_t ell, uint32_t eta, uint32_t m, uint64_t q) {
    const uint32_t cap = std::min(eta, m);
    if (t > ell * cap) fail(ErrorKind::WeightTooLarge, "weight exceeds ell * min(eta, m)");
    std::vector<BigInt> counts;
    for (uint32_t r = 0; r <= cap; ++r) counts.push_back(count_rank_matrices(q, m, eta, r));
    return SphereCount{t, ell, eta, m, q, composition_sum(counts, ell, t)};
}

double sphere_lower_bound(uint32_t t, uint32_t ell, uint32_t eta, uint32_t m, uint64_t q) {
    if (t > ell * std::min(eta, m)) fail(ErrorKind::WeightTooLarge, "weight exceeds ell * min(eta, m)");
    const double qd = static_cast<double>(q);
    double v = static_cast<double>(t) * (eta + m - static_cast<double>(t) / ell) - ell * std::log(gamma_q(qd)) / std::log(qd);
    if (t % ell) v -= ell / 4.0;
    return v;
}

double log_big(const BigInt& x) {
    if (x <= 0) return -INFINITY;
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 60) return std::log(x.convert_to<double>());
    const std::size_t shift = bits - 60;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

BlockRanker::BlockRanker(const FieldTower& tower, uint32_t ell, uint32_t eta)
    : tower_(tower), ell_(ell), eta_(eta), scratch_(std::size_t{eta} * tower.m()) {}

uint32_t BlockRanker::distance(const uint32_t* x, const uint32_t* y, uint32_t limit) const {
    const uint32_t m = tower_.m();
    uint32_t total = 0;
    for (uint32_t b = 0; b < ell_; ++b) {
        uint32_t rows = 0;
        for (uint32_t j = 0; j < eta_; ++j) {
            const std::size_t idx = std::size_t{b} * eta_ + j;
            const uint32_t d = y ? tower_.sub(x[idx], y[idx]) : x[idx];
            if (!d) continue;
            tower_.coords_into(d, &scratch_[std::size_t{rows} * m]);
            ++rows;
        }
        if (rows) total += detail::rank_mod_p(std::span<uint32_t>(scratch_.data(), std::size_t{rows} * m), m, tower_.p());
        if (total > limit) return limit + 1;
    }
    return total;
}

uint32_t BlockRanker::weight(const uint32_t* x) const { return distance(x, nullptr, UINT32_MAX - 1); }

}  // namespace lrs
