#include "lrs/detail/fp_linalg.hpp"

#include <utility>

namespace lrs::detail {

uint32_t inv_mod(uint32_t a, uint32_t p) {
    // Fermat; p is prime and a != 0 mod p.
    uint64_t result = 1, base = a % p;
    uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(result);
}

uint32_t rank_mod_p(std::span<uint32_t> rows, uint32_t cols, uint32_t p) {
    if (cols == 0) return 0;
    const std::size_t nrows = rows.size() / cols;
    uint32_t rank = 0;
    for (uint32_t c = 0; c < cols && rank < nrows; ++c) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot * cols + c] == 0) ++pivot;
        if (pivot == nrows) continue;
        if (pivot != rank)
            for (uint32_t j = c; j < cols; ++j) std::swap(rows[pivot * cols + j], rows[rank * cols + j]);
        uint32_t* prow = &rows[rank * cols];
        if (p == 2) {
            for (std::size_t r = rank + 1; r < nrows; ++r) {
                uint32_t* row = &rows[r * cols];
                if (row[c])
                    for (uint32_t j = c; j < cols; ++j) row[j] ^= prow[j];
            }
        } else {
            const uint64_t pinv = inv_mod(prow[c], p);
            for (std::size_t r = rank + 1; r < nrows; ++r) {
                uint32_t* row = &rows[r * cols];
                if (!row[c]) continue;
                const uint64_t factor = (p - row[c] * pinv % p) % p;
                for (uint32_t j = c; j < cols; ++j)
                    row[j] = static_cast<uint32_t>((row[j] + factor * prow[j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace lrs::detail
