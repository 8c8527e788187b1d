#include "lrs/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "lrs/detail/fp_linalg.hpp"

namespace lrs {

namespace {

const FieldTower& common_tower(FElem a, FElem b) {
    if (a.tower() == nullptr || a.tower() != b.tower())
        fail(ErrorKind::TowerMismatch, "field elements belong to different towers");
    return *a.tower();
}

const FieldTower& tower_of(FElem a) {
    if (a.tower() == nullptr) fail(ErrorKind::TowerMismatch, "element has no tower");
    return *a.tower();
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Coefficients of the idx-th monic polynomial of degree `deg` read as a base-p
// integer with c_0 least significant.
std::vector<uint32_t> nth_monic(uint64_t idx, uint32_t deg, uint32_t p) {
    std::vector<uint32_t> c(deg + 1, 0);
    c[deg] = 1;
    for (uint32_t i = 0; i < deg; ++i) {
        c[i] = static_cast<uint32_t>(idx % p);
        idx /= p;
    }
    return c;
}

// remainder of a mod b over F_p, b monic; both low-to-high.
bool divides(std::span<const uint32_t> b, std::vector<uint32_t> a, uint32_t p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        const uint64_t lead = a[i];
        if (!lead) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            const std::size_t k = i - db + j;
            a[k] = static_cast<uint32_t>((a[k] + (p - lead) * b[j]) % p);
        }
    }
    return std::all_of(a.begin(), a.begin() + std::min(db, a.size()), [](uint32_t v) { return v == 0; });
}

}  // namespace

// ---------------------------------------------------------------- FElem

std::vector<uint32_t> FElem::coords() const { return tower_of(*this).coords(id_); }

FElem FElem::operator-() const {
    const auto& t = tower_of(*this);
    return FElem(t, t.neg(id_));
}

FElem operator+(FElem a, FElem b) {
    const auto& t = common_tower(a, b);
    return FElem(t, t.add(a.id_, b.id_));
}

FElem operator-(FElem a, FElem b) {
    const auto& t = common_tower(a, b);
    return FElem(t, t.sub(a.id_, b.id_));
}

FElem operator*(FElem a, FElem b) {
    const auto& t = common_tower(a, b);
    return FElem(t, t.mul(a.id_, b.id_));
}

FElem operator/(FElem a, FElem b) {
    const auto& t = common_tower(a, b);
    return FElem(t, t.mul(a.id_, t.inv(b.id_)));
}

FElem FElem::inverse() const {
    const auto& t = tower_of(*this);
    return FElem(t, t.inv(id_));
}

FElem FElem::pow(uint64_t e) const {
    const auto& t = tower_of(*this);
    return FElem(t, t.pow(id_, e));
}

// ---------------------------------------------------------------- FieldTower

FieldTower::FieldTower(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    uint64_t order = 1;
    for (uint32_t i = 0; i < m; ++i) order *= p;
    order_ = static_cast<uint32_t>(order);
    place_.assign(m, 1);
    for (uint32_t i = m - 1; i-- > 0;) place_[i] = place_[i + 1] * p;
    one_id_ = place_[0];
}

FElem FieldTower::z() const {
    if (m_ == 1) {
        // z is the root of z + c_0, i.e. -c_0.
        return FElem(*this, (p_ - modulus_[0]) % p_);
    }
    return FElem(*this, place_[1]);
}

FElem FieldTower::element(uint32_t id) const {
    if (id >= order_) fail(ErrorKind::InvalidArgument, "element id out of range");
    return FElem(*this, id);
}

FElem FieldTower::from_coords(std::span<const uint32_t> c) const { return FElem(*this, id_from_coords(c)); }

FElem FieldTower::scalar(uint32_t lambda) const { return FElem(*this, (lambda % p_) * one_id_); }

std::vector<uint32_t> FieldTower::coords(uint32_t id) const {
    std::vector<uint32_t> c(m_);
    coords_into(id, c.data());
    return c;
}

void FieldTower::coords_into(uint32_t id, uint32_t* out) const noexcept {
    for (uint32_t i = m_; i-- > 0;) {
        out[i] = id % p_;
        id /= p_;
    }
}

uint32_t FieldTower::id_from_coords(std::span<const uint32_t> c) const {
    if (c.size() != m_) fail(ErrorKind::InvalidArgument, "coordinate vector length must equal m");
    uint32_t id = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        if (c[i] >= p_) fail(ErrorKind::InvalidArgument, "coordinate not reduced mod p");
        id = id * p_ + c[i];
    }
    return id;
}

uint32_t FieldTower::add(uint32_t a, uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0;
    for (uint32_t i = m_; i-- > 0;) {
        uint32_t d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        out += d * place_[i];
        a /= p_;
        b /= p_;
    }
    return out;
}

uint32_t FieldTower::neg(uint32_t a) const noexcept {
    if (p_ == 2) return a;
    uint32_t out = 0;
    for (uint32_t i = m_; i-- > 0;) {
        const uint32_t d = a % p_;
        out += (d ? p_ - d : 0) * place_[i];
        a /= p_;
    }
    return out;
}

uint32_t FieldTower::sub(uint32_t a, uint32_t b) const noexcept { return add(a, neg(b)); }

uint32_t FieldTower::mul(uint32_t a, uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    uint32_t e = log_[a] + log_[b];
    if (e >= order_ - 1) e -= order_ - 1;
    return exp_[e];
}

uint32_t FieldTower::inv(uint32_t a) const {
    if (a == 0) fail(ErrorKind::ZeroInput, "inverse of zero");
    return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

uint32_t FieldTower::pow(uint32_t a, uint64_t e) const noexcept {
    if (e == 0) return one_id_;
    if (a == 0) return 0;
    const uint64_t n = order_ - 1;
    return exp_[(static_cast<uint64_t>(log_[a]) * (e % n)) % n];
}

uint32_t FieldTower::frobenius(uint32_t a, uint32_t s) const noexcept {
    if (a == 0) return 0;
    const uint64_t n = order_ - 1;
    uint64_t factor = 1;
    for (uint32_t i = 0; i < s % m_; ++i) factor = factor * p_ % n;
    return exp_[(static_cast<uint64_t>(log_[a]) * factor) % n];
}

uint32_t FieldTower::mul_reference(uint32_t a, uint32_t b) const {
    const auto ca = coords(a), cb = coords(b);
    std::vector<uint64_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i)
        for (uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + uint64_t{ca[i]} * cb[j]) % p_;
    for (std::size_t i = prod.size(); i-- > m_;) {
        const uint64_t lead = prod[i];
        if (!lead) continue;
        for (uint32_t j = 0; j <= m_; ++j) {
            const std::size_t k = i - m_ + j;
            prod[k] = (prod[k] + (p_ - lead) * modulus_[j]) % p_;
        }
    }
    std::vector<uint32_t> out(m_);
    for (uint32_t i = 0; i < m_; ++i) out[i] = static_cast<uint32_t>(prod[i]);
    return id_from_coords(out);
}

bool is_prime(uint64_t n) noexcept {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::span<const uint32_t> poly, uint32_t p) {
    const uint32_t deg = static_cast<uint32_t>(poly.size()) - 1;
    std::vector<uint32_t> a(poly.begin(), poly.end());
    for (uint32_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx)
            if (divides(nth_monic(idx, d, p), a, p)) return false;
    }
    return true;
}

TowerPtr build_tower(uint32_t p, uint32_t m) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
    if (m == 0) fail(ErrorKind::DegreeZero, "extension degree must be positive");
    uint64_t order = 1;
    for (uint32_t i = 0; i < m; ++i) {
        order *= p;
        if (order > FieldTower::kMaxOrder)
            fail(ErrorKind::FieldTooLarge, "p^m exceeds " + std::to_string(FieldTower::kMaxOrder));
    }

    std::vector<uint32_t> modulus;
    for (uint64_t idx = 0; idx < order; ++idx) {
        auto cand = nth_monic(idx, m, p);
        // z itself is excluded so that z is always a unit.
        if (cand[0] != 0 && is_irreducible(cand, p)) {
            modulus = std::move(cand);
            break;
        }
    }

    std::shared_ptr<FieldTower> tower(new FieldTower(p, m, std::move(modulus)));
    FieldTower& t = *tower;
    const uint64_t n = order - 1;
    const auto factors = prime_factors(n);

    auto slow_pow = [&](uint32_t a, uint64_t e) {
        uint32_t result = t.one_id_, base = a;
        while (e) {
            if (e & 1) result = t.mul_reference(result, base);
            base = t.mul_reference(base, base);
            e >>= 1;
        }
        return result;
    };

    for (uint32_t id = 1; id < order; ++id) {
        const bool primitive = std::all_of(factors.begin(), factors.end(),
                                           [&](uint64_t r) { return slow_pow(id, n / r) != t.one_id_; });
        if (primitive) {
            t.primitive_id_ = id;
            break;
        }
    }

    t.exp_.assign(n, 0);
    t.log_.assign(order, 0);
    uint32_t cur = t.one_id_;
    for (uint64_t e = 0; e < n; ++e) {
        t.exp_[e] = cur;
        t.log_[cur] = static_cast<uint32_t>(e);
        cur = t.mul_reference(cur, t.primitive_id_);
    }
    return tower;
}

// ---------------------------------------------------------------- Automorphism

Automorphism::Automorphism(TowerPtr tower, uint32_t s) : tower_(std::move(tower)), s_(s) {
    if (!tower_) fail(ErrorKind::TowerMismatch, "automorphism needs a tower");
    if (s_ >= tower_->m()) fail(ErrorKind::InvalidArgument, "automorphism exponent must satisfy 0 <= s < m");
}

uint32_t Automorphism::fixed_degree() const noexcept { return std::gcd(s_, tower_->m()); }

uint64_t Automorphism::fixed_field_size() const noexcept {
    uint64_t out = 1;
    for (uint32_t i = 0; i < fixed_degree(); ++i) out *= tower_->p();
    return out;
}

FElem Automorphism::operator()(FElem a) const { return apply_n(a, 1); }

FElem Automorphism::apply_n(FElem a, uint32_t k) const {
    if (a.tower() != tower_.get()) fail(ErrorKind::TowerMismatch, "element not in the automorphism's tower");
    const uint64_t shift = (uint64_t{s_} * k) % tower_->m();
    return FElem(*tower_, tower_->frobenius(a.id(), static_cast<uint32_t>(shift)));
}

Automorphism Automorphism::power(uint32_t k) const {
    return Automorphism(tower_, static_cast<uint32_t>((uint64_t{s_} * k) % tower_->m()));
}

FElem apply_aut(const Automorphism& psi, FElem a) { return psi(a); }

FElem norm(const Automorphism& psi, FElem a) {
    if (a.tower() != &psi.tower()) fail(ErrorKind::TowerMismatch, "element not in the automorphism's tower");
    if (a.is_zero()) fail(ErrorKind::ZeroInput, "norm of zero");
    FElem out = psi.tower().one();
    FElem cur = a;
    for (uint32_t i = 0; i < psi.order(); ++i) {
        out = out * cur;
        cur = psi(cur);
    }
    return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const Automorphism& sigma) {
    const auto& t = sigma.tower();
    std::map<uint32_t, std::size_t> slot;
    std::vector<ConjugacyClass> out;
    for (uint32_t id = 1; id < t.order(); ++id) {
        const FElem a(t, id);
        const FElem nv = norm(sigma, a);
        auto [it, inserted] = slot.emplace(nv.id(), out.size());
        if (inserted) out.push_back({nv, {}});
        out[it->second].members.push_back(a);
    }
    return out;
}

std::optional<FElem> hilbert90_witness(const Automorphism& sigma, FElem a, FElem b) {
    const auto& t = sigma.tower();
    if (a.tower() != &t || b.tower() != &t) fail(ErrorKind::TowerMismatch, "element not in the automorphism's tower");
    if (a.is_zero() || b.is_zero()) fail(ErrorKind::ZeroInput, "conjugacy is defined on nonzero elements");
    for (uint32_t id = 1; id < t.order(); ++id) {
        const FElem c(t, id);
        if (a * c == b * sigma(c)) return c;
    }
    return std::nullopt;
}

FElem subfield_generator(const FieldTower& tower, uint32_t g) {
    if (g == 0 || tower.m() % g) fail(ErrorKind::NotADivisor, std::to_string(g) + " does not divide m");
    uint64_t qg = 1;
    for (uint32_t i = 0; i < g; ++i) qg *= tower.p();
    const uint64_t e = (uint64_t{tower.order()} - 1) / (qg - 1);
    return tower.primitive_element().pow(e);
}

uint32_t closure_dimension(std::span<const FElem> elements, std::span<const FElem> multipliers) {
    if (elements.empty()) return 0;
    const FieldTower& t = tower_of(elements.front());
    const uint32_t m = t.m();
    std::vector<uint32_t> rows;
    rows.reserve(elements.size() * multipliers.size() * m);
    std::vector<uint32_t> c(m);
    for (FElem e : elements) {
        if (e.tower() != &t) fail(ErrorKind::TowerMismatch, "mixed towers in span");
        if (e.is_zero()) continue;
        for (FElem mult : multipliers) {
            t.coords_into(t.mul(e.id(), mult.id()), c.data());
            rows.insert(rows.end(), c.begin(), c.end());
        }
    }
    return detail::rank_mod_p(std::span<uint32_t>(rows), m, t.p());
}

SubfieldBasis subfield_basis(const TowerPtr& tower, uint32_t g) {
    SubfieldBasis out;
    out.g = g;
    out.theta = subfield_generator(*tower, g);
    FElem cur = tower->one();
    for (uint32_t j = 0; j < g; ++j) {
        out.theta_powers.push_back(cur);
        cur = cur * out.theta;
    }
    const uint32_t target = tower->m() / g;
    FElem zpow = tower->one();
    const FElem z = tower->z();
    std::vector<FElem> chosen;
    for (uint32_t i = 0; i < tower->m() && out.relative_basis.size() < target; ++i, zpow = zpow * z) {
        chosen.push_back(zpow);
        if (closure_dimension(chosen, out.theta_powers) == g * chosen.size())
            out.relative_basis.push_back(zpow);
        else
            chosen.pop_back();
    }
    if (out.relative_basis.size() != target)
        fail(ErrorKind::InvariantViolation, "could not complete a relative basis");
    return out;
}

}  // namespace lrs
