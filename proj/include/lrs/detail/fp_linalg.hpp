#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lrs::detail {

uint32_t inv_mod(uint32_t a, uint32_t p);

/// Rank over F_p of a row-major matrix with `cols` columns. The buffer is
/// used as scratch space and left in row-echelon form.
uint32_t rank_mod_p(std::span<uint32_t> rows, uint32_t cols, uint32_t p);

inline uint32_t rank_mod_p(std::vector<std::vector<uint32_t>> rows, uint32_t cols, uint32_t p) {
    std::vector<uint32_t> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return rank_mod_p(std::span<uint32_t>(flat), cols, p);
}

}  // namespace lrs::detail
