#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lrs/gf.hpp"

namespace lrs {

/// Element of F_{q^m}[x; σ]. Coefficients are indexed by degree and carry no
/// trailing zeros; the zero polynomial has an empty coefficient list.
class SkewPoly {
   public:
    explicit SkewPoly(Automorphism sigma) : sigma_(std::move(sigma)) {}
    SkewPoly(Automorphism sigma, std::vector<FElem> coeffs);

    static SkewPoly constant(Automorphism sigma, FElem c);
    /// c·x^d
    static SkewPoly monomial(Automorphism sigma, FElem c, uint32_t d);

    const Automorphism& sigma() const noexcept { return sigma_; }
    const FieldTower& tower() const noexcept { return sigma_.tower(); }
    const std::vector<FElem>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^i, zero past the degree.
    FElem coeff(std::size_t i) const;
    /// Exponents with nonzero coefficient.
    std::vector<uint32_t> support() const;

    SkewPoly operator-() const;

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.sigma_ == b.sigma_ && a.coeffs_ == b.coeffs_;
    }

   private:
    Automorphism sigma_;
    std::vector<FElem> coeffs_;
};

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g);
/// (fg)_k = Σ_{i+j=k} f_i σ^i(g_j)
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

inline SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) { return skew_add(f, g); }
inline SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) { return skew_sub(f, g); }
inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return skew_mul(f, g); }

/// Generalized operator evaluation f(β)_a = Σ_i f_i σ^i(β) N_i(a), where
/// N_i(a) = σ^0(a)·σ^1(a)···σ^{i-1}(a).
FElem op_eval(const SkewPoly& f, FElem beta, FElem a);

/// Block evaluators `a` (one per block) and basis points `beta` (one per
/// position inside a block).
struct EvalPair {
    Automorphism sigma;
    std::vector<FElem> a;
    std::vector<FElem> beta;

    uint32_t ell() const noexcept { return static_cast<uint32_t>(a.size()); }
    uint32_t eta() const noexcept { return static_cast<uint32_t>(beta.size()); }
    uint32_t n() const noexcept { return ell() * eta(); }
};

struct EvalPairCheck {
    bool a_nonzero = false;
    bool a_distinct_classes = false;
    bool beta_independent = false;

    bool ok() const noexcept { return a_nonzero && a_distinct_classes && beta_independent; }
};

/// Evaluators must be nonzero with pairwise distinct norms; β must be linearly
/// independent over the fixed field of σ.
EvalPairCheck check_eval_pair(const EvalPair& pair);

/// Default pair: a_i is the smallest member of the i-th conjugacy class,
/// β = (1, z, ..., z^{η-1}).
EvalPair make_eval_pair(const TowerPtr& tower, const Automorphism& sigma, uint32_t ell, uint32_t eta);

/// ev_{a,β}(f) block by block: [f(β_1)_{a_1}, ..., f(β_η)_{a_1}, f(β_1)_{a_2}, ...].
std::vector<FElem> multi_eval(const SkewPoly& f, const EvalPair& pair);

/// Cached ev_{a,β} as an n×n matrix over F_{q^m} acting on coefficient
/// vectors of degree < n, plus its inverse.
class Evaluator {
   public:
    explicit Evaluator(EvalPair pair);

    const EvalPair& pair() const noexcept { return pair_; }
    uint32_t n() const noexcept { return n_; }

    std::vector<FElem> evaluate(const SkewPoly& f) const;
    /// Evaluates the polynomial with the given coefficient ids (length ≤ n);
    /// writes n ids.
    void evaluate_ids(std::span<const uint32_t> coeff_ids, std::span<uint32_t> out) const;
    /// The unique f of degree < n with ev(f) = v.
    SkewPoly preimage(std::span<const FElem> v) const;

   private:
    EvalPair pair_;
    uint32_t n_;
    std::vector<uint32_t> matrix_;   // row r = position, column i = degree
    std::vector<uint32_t> inverse_;  // row i = degree, column r = position
};

}  // namespace lrs
