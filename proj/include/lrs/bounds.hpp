#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrs/code.hpp"
#include "lrs/skewpoly.hpp"
#include "lrs/sumrank.hpp"

namespace lrs {

enum class BoundKind { Theorem1, Lemma2, Theorem2, Corollary4, Theorem3 };

std::string to_string(BoundKind kind);

/// A lower bound q^(log_q_value + correction): an exact rational exponent and a
/// floating correction holding the γ and ℓ/4 terms.
struct BoundReport {
    BoundKind kind = BoundKind::Theorem1;
    uint64_t q = 0;
    Rational log_q_value;
    double correction = 0.0;
    std::map<std::string, double> params;

    double total_log_q() const;
    double value() const;
    /// True when the bound is at most `count` (compared in log_q, tolerance 1e-9).
    bool at_most(const BigInt& count) const;
};

inline constexpr double kLogTolerance = 1e-9;

/// log_q γ_q
double log_q_gamma(uint64_t q);

BoundReport lemma2_bound(uint32_t t, uint32_t ell, uint32_t eta, uint32_t m, uint64_t q);

/// q^{m + τ(m+η) - τ²/ℓ - md} U^{-1}, U = γ_q^ℓ (ℓ | τ) or (q^{1/4} γ_q)^ℓ.
BoundReport theorem1_bound(uint32_t ell, uint32_t eta, uint32_t m, uint64_t q, uint32_t d, uint32_t tau);

/// (ℓm+n)/2 - sqrt(((ℓm+n)/2)² - ℓ²(1/4 + log_q γ_q) - ℓm(d-1) - εn)
double corollary1_radius(uint32_t ell, uint32_t m, uint32_t n, uint32_t d, uint64_t q, double eps);

/// Least multiple of ℓ strictly greater than n(1 - √R + ε).
uint64_t corollary2_radius(double R, uint32_t ell, uint64_t n, double eps);

struct Corollary3Params {
    double zeta = 0;
    double delta = 0;
    double b = 0;
};

Corollary3Params corollary3_params(double R, double a, uint64_t q, double eps);

// ------------------------------------------------------------ witnesses

struct WitnessList {
    BlockVector center;
    std::vector<SkewPoly> messages;
    uint32_t radius = 0;
    uint64_t set_size = 0;
    /// Number of degrees in [k, n-1] used by some member of S.
    uint32_t s = 0;
    uint64_t num_classes = 0;

    uint64_t size() const noexcept { return messages.size(); }
    /// L · q^{m s} ≥ |S|
    bool meets_guarantee(uint64_t field_order) const;
};

/// Pigeonhole list construction: groups S by the coefficients of degree
/// k..n-1, keeps the largest group {f_1, ..., f_L} (ties: smallest
/// coefficient tuple) and returns center ev(f_1) with messages f_1 - f_i.
WitnessList pigeonhole_witness(const LrsCode& code, const std::vector<SkewPoly>& S, uint32_t tau);

/// Every message has degree < k and encodes within the radius of the center.
bool verify_witness(const LrsCode& code, const WitnessList& w);

/// All vectors of F_{q^m}^{ℓη} (as id rows) whose sum-rank weight over
/// F_{q^g} is at most max_weight.
std::vector<std::vector<uint32_t>> low_weight_vectors(const FieldTower& tower, uint32_t ell, uint32_t eta, uint32_t g,
                                                      uint32_t max_weight, uint64_t max_enum = kDefaultEnumCap);

/// {f : deg f < n, wt(ev_{a,β}(f)) ≤ τ}, via preimages of low-weight vectors.
std::vector<SkewPoly> weight_ball_preimages(const EvalPair& pair, uint32_t tau, uint64_t max_enum = kDefaultEnumCap);

// ------------------------------------------------------------ sparse polynomials

struct StructuredBeta {
    std::vector<FElem> beta;   // [α_1γ_1, ..., α_1γ_g, α_2γ_1, ..., α_{η/g}γ_g]
    std::vector<FElem> alpha;  // F_{q^g}-independent
    std::vector<FElem> gamma;  // F_q-basis of F_{q^g}
};

StructuredBeta build_structured_beta(const TowerPtr& tower, uint32_t g, uint32_t eta);

/// a'_i = ∏_{j<g} σ^j(a_i)
std::vector<FElem> twist_evaluators(const Automorphism& sigma, const std::vector<FElem>& a, uint32_t g);

/// Σ f_i y^i over σ^g  ↦  Σ f_i x^{gi} over σ.
SkewPoly lift_sparse(const SkewPoly& f, const Automorphism& sigma, uint32_t g, uint32_t n);

/// Outer pair (a, β) over σ together with the inner pair (a', α) over σ^g.
struct StructuredPair {
    uint32_t g = 0;
    EvalPair outer;
    EvalPair inner;
    StructuredBeta parts;
};

StructuredPair make_structured_pair(const TowerPtr& tower, const Automorphism& sigma, std::vector<FElem> a,
                                    uint32_t eta, uint32_t g);
StructuredPair make_structured_pair(const TowerPtr& tower, const Automorphism& sigma, uint32_t ell, uint32_t eta,
                                    uint32_t g);

/// Checks g | m, g | τ, ℓ | τ and η = m.
void require_sparse_preconditions(const StructuredPair& sp, uint32_t tau);

/// R_g(σ, τ) generated as lifts of all f over σ^g whose F_{q^g}-weight under
/// ev_{a',α} is at most τ/g.
std::vector<SkewPoly> sparse_set_enumerate(const StructuredPair& sp, uint32_t tau, uint64_t max_enum = kDefaultEnumCap);

/// R_g(σ, τ) by filtering every polynomial supported on gZ.
std::vector<SkewPoly> sparse_set_filter(const StructuredPair& sp, uint32_t tau, uint64_t max_enum = kDefaultEnumCap);

/// wt_q(ev_{a,β}(lift f)) == g · wt_{q^g}(ev_{a',α}(f))
bool weight_scaling_check(const SkewPoly& f, const StructuredPair& sp);

/// q^{(τ/g)(m+η-τ/ℓ)} γ_{q^g}^{-ℓ}; params["ell_divides_tau_over_g"] is 1 iff ℓ | τ/g.
BoundReport theorem2_bound(uint32_t ell, uint32_t eta, uint32_t m, uint64_t q, uint32_t g, uint32_t tau);

/// q^{m + (τ/g)(η-m-τ/ℓ)} γ_{q^g}^{-ℓ}
BoundReport corollary4_bound(uint32_t ell, uint32_t eta, uint32_t m, uint64_t q, uint32_t g, uint32_t tau, uint32_t k);

// ------------------------------------------------------------ code families

struct FamilyParams {
    uint32_t ell = 0;
    uint32_t C = 0;
    uint32_t D = 0;
    uint32_t g = 0;
};

struct Construction1Instance {
    FamilyParams family;
    uint64_t q = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t m = 0;
    uint32_t eta = 0;
    uint32_t tau = 0;  // ⌊(n-k)/2⌋ + 1 = Dg

    Rational rate() const { return Rational(k, n); }
};

Construction1Instance construction1_instance(const FamilyParams& fp, uint64_t q);

/// The instance's code with a structured evaluation pair.
struct Construction1Code {
    Construction1Instance instance;
    StructuredPair pair;
    LrsCode code;
};

Construction1Code construction1_code(const Construction1Instance& inst);

/// q^{(g/ℓ)(C - D²)} γ_{q^g}^{-ℓ}
BoundReport theorem3_bound(const FamilyParams& fp, uint64_t q);

struct RateSearch {
    uint32_t ell = 0;
    Rational rate;
    uint32_t C = 0;
    uint32_t D = 0;
    /// First C skipped: from here on 1 - 2/√(C-1) > rate.
    uint32_t stop_C = 0;
};

/// Minimizes 1 - 2D/C over ℓ | C, C > max(D², 2D), D ≥ 1.
RateSearch minimize_rate(uint32_t ell);

struct RegionRow {
    double R = 0;
    double johnson = 0;
    double unique = 0;
};

std::vector<RegionRow> emit_region_data(const std::vector<double>& R_grid);

}  // namespace lrs
