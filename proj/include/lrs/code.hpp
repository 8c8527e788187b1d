#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrs/skewpoly.hpp"
#include "lrs/sumrank.hpp"

namespace lrs {

inline constexpr uint64_t kDefaultEnumCap = uint64_t{1} << 20;

/// Linearized Reed-Solomon code {ev_{a,β}(f) : deg f < k}.
struct LrsCode {
    TowerPtr tower;
    Automorphism sigma;
    EvalPair pair;
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t ell = 0;
    uint32_t eta = 0;

    uint32_t d() const noexcept { return n - k + 1; }
    /// q^m, the size of the coefficient field.
    uint64_t field_order() const noexcept { return tower->order(); }
};

/// Builds a code with the default evaluation pair unless a or β is supplied.
LrsCode make_code(const TowerPtr& tower, uint32_t s, uint32_t ell, uint32_t eta, uint32_t k,
                  std::optional<std::vector<FElem>> a = std::nullopt,
                  std::optional<std::vector<FElem>> beta = std::nullopt);

/// Builds a code around an explicit evaluation pair.
LrsCode make_code(EvalPair pair, uint32_t k);

BlockVector encode(const LrsCode& code, const SkewPoly& f);

/// Message number `index` in lexicographic order of (f_0, ..., f_{k-1}),
/// each coefficient ranging over element ids.
SkewPoly message_from_index(const LrsCode& code, uint64_t index);

/// min weight over nonzero codewords, by enumerating all q^{mk} messages.
uint32_t min_distance_exhaustive(const LrsCode& code, uint64_t max_enum = kDefaultEnumCap);

enum class CenterStrategy { All, Cosets, Given };

std::string to_string(CenterStrategy s);
CenterStrategy parse_strategy(const std::string& s);

struct OracleOptions {
    CenterStrategy strategy = CenterStrategy::Cosets;
    std::vector<BlockVector> centers;  // for Given
    uint64_t max_enum = kDefaultEnumCap;
    unsigned workers = 1;
};

struct ListOracleResult {
    uint64_t max_list = 0;
    BlockVector argmax_center;
    uint64_t argmax_index = 0;
    uint32_t radius = 0;
    std::vector<SkewPoly> codewords_in_ball;
    uint64_t centers_examined = 0;
    CenterStrategy strategy = CenterStrategy::Cosets;
    /// True when every center of the space (or a representative of every
    /// coset) was examined, so max_list equals L(C, τ).
    bool exact = false;
};

/// L(C, τ) = max_r |C ∩ B_τ(r)|. Ties go to the smallest center index.
ListOracleResult list_size_oracle(const LrsCode& code, uint32_t tau, const OracleOptions& options = {});

/// Recounts the codewords within `radius` of the result's center.
bool recheck_oracle_result(const LrsCode& code, const ListOracleResult& result);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CodeCertificate {
    std::vector<Check> checks;
    bool ok() const noexcept;
};

CodeCertificate validate_code(const LrsCode& code);

uint64_t checked_pow(uint64_t base, uint64_t e, uint64_t cap, const char* what);

}  // namespace lrs
