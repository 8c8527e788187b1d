#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "lrs/gf.hpp"

namespace lrs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// x = [x_1 | ... | x_ℓ] with ℓ blocks of length η.
struct BlockVector {
    uint32_t ell = 0;
    uint32_t eta = 0;
    std::vector<FElem> data;

    BlockVector() = default;
    BlockVector(uint32_t ell, uint32_t eta, std::vector<FElem> data);

    uint32_t n() const noexcept { return ell * eta; }
    std::span<const FElem> block(uint32_t i) const { return {data.data() + std::size_t{i} * eta, eta}; }
    friend bool operator==(const BlockVector&, const BlockVector&) = default;
};

BlockVector operator-(const BlockVector& x, const BlockVector& y);
BlockVector operator+(const BlockVector& x, const BlockVector& y);

/// dim over F_{q^g} of the F_{q^g}-span of v.
uint32_t rank_over_subfield(std::span<const FElem> v, uint32_t g);

/// Σ_i rank_over_subfield(x_i, g); g = 1 is the usual sum-rank weight.
uint32_t sum_rank_weight(const BlockVector& x, uint32_t g = 1);

uint32_t sum_rank_dist(const BlockVector& x, const BlockVector& y);

/// Number of m×η matrices over F_q of rank t. Zero for min(m,η) < t ≤ max(m,η).
BigInt count_rank_matrices(uint64_t q, uint32_t m, uint32_t eta, uint32_t t);

/// γ_q = ∏_{i≥1} (1 - q^{-i})^{-1}, truncated once q^{-i} < 1e-18.
double gamma_q(double q);

struct SphereCount {
    uint32_t t = 0;
    uint32_t ell = 0;
    uint32_t eta = 0;
    uint32_t m = 0;
    uint64_t q = 0;
    BigInt exact;
};

/// Number of vectors in F_{q^m}^{ℓη} of ℓ-sum-rank weight exactly t.
SphereCount sphere_size(uint32_t t, uint32_t ell, uint32_t eta, uint32_t m, uint64_t q);

/// log_q of the lower bound t(η+m-t/ℓ) - ℓ log_q γ_q, less ℓ/4 when ℓ ∤ t.
double sphere_lower_bound(uint32_t t, uint32_t ell, uint32_t eta, uint32_t m, uint64_t q);

/// Natural-log helpers that stay finite for integers far above double range.
double log_big(const BigInt& x);
inline double log_q_big(const BigInt& x, double q) { return log_big(x) / std::log(q); }

BigInt ipow(uint64_t base, uint64_t e);

/// Rank kernel on raw ids: rank over F_q of each block of a difference
/// vector. Used by the enumeration loops.
class BlockRanker {
   public:
    BlockRanker(const FieldTower& tower, uint32_t ell, uint32_t eta);

    /// Σ_i rk(x_i - y_i); stops early and returns limit + 1 once the running
    /// total exceeds `limit`.
    uint32_t distance(const uint32_t* x, const uint32_t* y, uint32_t limit) const;
    uint32_t weight(const uint32_t* x) const;

   private:
    const FieldTower& tower_;
    uint32_t ell_;
    uint32_t eta_;
    mutable std::vector<uint32_t> scratch_;
};

}  // namespace lrs
