#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "rgc/bitstring.hpp"

namespace rgc {

/// Binary reflected Gray code R_k and the flip-position bookkeeping used to
/// order the base code.
///
/// Bit significance convention: bit z of a word lives at string position
/// k-1-z, so z = 0 is the rightmost (least significant) bit.

inline void check_brc_args(std::uint64_t i, unsigned k, std::uint64_t limit) {
    if (k == 0 || k > 63) throw std::out_of_range("brc: k must be in [1, 63]");
    if (i > limit) throw std::out_of_range("brc: index out of range");
}

/// R_k(i) = bit pattern of i XOR (i >> 1), MSB first.
inline BitString brc_encode(std::uint64_t i, unsigned k) {
    check_brc_args(i, k, (UINT64_C(1) << k) - 1);
    return BitString::from_uint(i ^ (i >> 1), k);
}

/// Inverse of brc_encode, by prefix XOR from the most significant bit.
inline std::uint64_t brc_decode(const BitString& word) {
    const std::size_t k = word.size();
    std::uint64_t i = 0;
    bool acc = false;
    for (std::size_t pos = 0; pos < k; ++pos) {
        acc ^= word.get(pos);
        if (acc) i |= UINT64_C(1) << (k - 1 - pos);
    }
    return i;
}

/// Significance index of the single bit where R_k(i) and R_k(i+1) differ;
/// the wrap transition i = 2^k - 1 flips the most significant bit.
inline unsigned flip_position(std::uint64_t i, unsigned k) {
    check_brc_args(i, k, (UINT64_C(1) << k) - 1);
    if (i == (UINT64_C(1) << k) - 1) return k - 1;
    return static_cast<unsigned>(std::countr_zero(i + 1));
}

/// Number of non-wrap transitions l < min(i, 2^k - 1) with flip position z.
inline std::uint64_t flip_count(std::uint64_t i, unsigned z, unsigned k) {
    check_brc_args(i, k, UINT64_C(1) << k);
    if (z >= k) throw std::out_of_range("flip_count: z out of range");
    const std::uint64_t m = std::min(i, (UINT64_C(1) << k) - 1);
    return (m + (UINT64_C(1) << z)) >> (z + 1);
}

}  // namespace rgc
