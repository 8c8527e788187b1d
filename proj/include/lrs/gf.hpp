#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lrs/error.hpp"

namespace lrs {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Element of F_{p^m}. Holds a non-owning pointer to its tower; the tower must
/// outlive every element created from it.
///
/// Elements are numbered by their polynomial-basis coordinates (c_0, ..., c_{m-1})
/// read as a base-p numeral with c_0 as the leading digit, so numeric order of
/// ids is lexicographic order on the coordinate sequence.
class FElem {
   public:
    FElem() = default;
    FElem(const FieldTower& tower, uint32_t id) : tower_(&tower), id_(id) {}

    const FieldTower* tower() const noexcept { return tower_; }
    uint32_t id() const noexcept { return id_; }
    bool is_zero() const noexcept { return id_ == 0; }
    std::vector<uint32_t> coords() const;

    FElem operator-() const;
    FElem& operator+=(FElem rhs) { return *this = *this + rhs; }
    FElem& operator-=(FElem rhs) { return *this = *this - rhs; }
    FElem& operator*=(FElem rhs) { return *this = *this * rhs; }

    friend FElem operator+(FElem a, FElem b);
    friend FElem operator-(FElem a, FElem b);
    friend FElem operator*(FElem a, FElem b);
    friend FElem operator/(FElem a, FElem b);
    friend bool operator==(FElem a, FElem b) noexcept { return a.tower_ == b.tower_ && a.id_ == b.id_; }
    friend std::strong_ordering operator<=>(FElem a, FElem b) noexcept { return a.id_ <=> b.id_; }

    FElem inverse() const;
    FElem pow(uint64_t e) const;

   private:
    const FieldTower* tower_ = nullptr;
    uint32_t id_ = 0;
};

/// F_p ⊂ F_{p^m} with log/antilog tables. Build through build_tower().
class FieldTower {
   public:
    /// Largest supported field order; keeps the log tables at a few MiB.
    static constexpr uint64_t kMaxOrder = uint64_t{1} << 20;

    uint32_t p() const noexcept { return p_; }
    uint32_t m() const noexcept { return m_; }
    /// q^m, the number of field elements.
    uint32_t order() const noexcept { return order_; }
    /// Monic irreducible modulus, coefficients low-to-high (length m + 1).
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }

    FElem zero() const { return FElem(*this, 0); }
    FElem one() const { return FElem(*this, one_id_); }
    /// The polynomial-basis generator z (equals a prime-field element when m = 1).
    FElem z() const;
    FElem primitive_element() const { return FElem(*this, primitive_id_); }
    FElem element(uint32_t id) const;
    FElem from_coords(std::span<const uint32_t> coords) const;
    /// Embeds λ ∈ F_p.
    FElem scalar(uint32_t lambda) const;

    std::vector<uint32_t> coords(uint32_t id) const;
    void coords_into(uint32_t id, uint32_t* out) const noexcept;
    uint32_t id_from_coords(std::span<const uint32_t> coords) const;

    uint32_t add(uint32_t a, uint32_t b) const noexcept;
    uint32_t sub(uint32_t a, uint32_t b) const noexcept;
    uint32_t neg(uint32_t a) const noexcept;
    uint32_t mul(uint32_t a, uint32_t b) const noexcept;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const noexcept;
    /// a^(p^s)
    uint32_t frobenius(uint32_t a, uint32_t s) const noexcept;
    /// Discrete log to the base of the primitive element; a must be nonzero.
    uint32_t log(uint32_t a) const noexcept { return log_[a]; }
    uint32_t exp(uint64_t e) const noexcept { return exp_[e % (order_ - 1)]; }

    /// Schoolbook multiply-and-reduce in the polynomial basis; used to build the
    /// tables and to cross-check them.
    uint32_t mul_reference(uint32_t a, uint32_t b) const;

    friend bool operator==(const FieldTower& a, const FieldTower& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_ && a.primitive_id_ == b.primitive_id_;
    }

   private:
    friend TowerPtr build_tower(uint32_t p, uint32_t m);
    FieldTower(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t p_;
    uint32_t m_;
    uint32_t order_;
    uint32_t one_id_;
    uint32_t primitive_id_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> place_;  // place_[i] = p^(m-1-i), weight of coordinate i
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
};

bool is_prime(uint64_t n) noexcept;
/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(std::span<const uint32_t> poly_low_to_high, uint32_t p);

/// Deterministic tower: the monic irreducible modulus (nonzero constant term) that is smallest
/// as a base-p integer with c_{m-1} most significant, and the smallest
/// primitive element id.
TowerPtr build_tower(uint32_t p, uint32_t m);

/// ψ = φ_q^s on F_{q^m}.
class Automorphism {
   public:
    Automorphism(TowerPtr tower, uint32_t s);

    const TowerPtr& tower_ptr() const noexcept { return tower_; }
    const FieldTower& tower() const noexcept { return *tower_; }
    uint32_t s() const noexcept { return s_; }
    /// Degree over F_q of the fixed field, gcd(s, m).
    uint32_t fixed_degree() const noexcept;
    /// [F_{q^m} : fixed field].
    uint32_t order() const noexcept { return tower_->m() / fixed_degree(); }
    /// Number of elements of the fixed field.
    uint64_t fixed_field_size() const noexcept;

    FElem operator()(FElem a) const;
    /// ψ^k
    Automorphism power(uint32_t k) const;
    /// ψ^k(a) without building the composed automorphism.
    FElem apply_n(FElem a, uint32_t k) const;

    friend bool operator==(const Automorphism& a, const Automorphism& b) noexcept {
        return a.s_ == b.s_ && (a.tower_ == b.tower_ || *a.tower_ == *b.tower_);
    }

   private:
    TowerPtr tower_;
    uint32_t s_;
};

FElem apply_aut(const Automorphism& psi, FElem a);

/// ∏_{i < [F_{q^m} : F^ψ]} ψ^i(a)
FElem norm(const Automorphism& psi, FElem a);

struct ConjugacyClass {
    FElem norm_value;
    std::vector<FElem> members;  // ascending
};

/// Partition of F_{q^m}^* by norm value, classes ordered by smallest member.
std::vector<ConjugacyClass> conjugacy_classes(const Automorphism& sigma);

/// Some c with a = b·σ(c)·c^{-1}, found by scanning F_{q^m}^*.
std::optional<FElem> hilbert90_witness(const Automorphism& sigma, FElem a, FElem b);

struct SubfieldBasis {
    uint32_t g = 0;
    FElem theta;
    std::vector<FElem> theta_powers;    // F_q-basis of F_{q^g}
    std::vector<FElem> relative_basis;  // F_{q^g}-basis of F_{q^m}
};

SubfieldBasis subfield_basis(const TowerPtr& tower, uint32_t g);

/// θ = primitive^((q^m-1)/(q^g-1)), a generator of F_{q^g}^*.
FElem subfield_generator(const FieldTower& tower, uint32_t g);

/// dim over F_p of the F_p-span of `elements` after closing it under
/// multiplication by `multipliers` (pass {1} for the plain F_p-span).
uint32_t closure_dimension(std::span<const FElem> elements, std::span<const FElem> multipliers);

}  // namespace lrs
