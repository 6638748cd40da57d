#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rgc/bitstring.hpp"
#include "rgc/gray_code.hpp"

namespace rgc::oracle {

// Deliberately naive reference implementations for small instances.
// Hard size guards keep the exponential costs from going unnoticed.

constexpr std::uint64_t kMaxBlocks = 1024;
constexpr std::uint64_t kMaxCodewords = 1000000;

inline void check_small(const GrayCode& g) {
    if (g.blocks() > kMaxBlocks || g.num_codewords() > kMaxCodewords) {
        throw std::invalid_argument("oracle: instance too large for brute force");
    }
}

/// r_i by direct summation of pairwise W distances.
inline std::uint64_t naive_r(const GrayCode& g, std::uint64_t i) {
    check_small(g);
    if (i > g.blocks()) throw std::out_of_range("naive_r: i out of range");
    std::uint64_t r = 0;
    for (std::uint64_t l = 0; l < i; ++l) {
        r += hamming_distance(g.build_w(l), g.build_w((l + 1) % g.blocks()));
    }
    return r;
}

/// g_j by walking j single-bit flips from w_0.
inline BitString naive_encode(const GrayCode& g, std::uint64_t j) {
    check_small(g);
    if (j >= g.num_codewords()) throw std::out_of_range("naive_encode: j out of range");
    BitString word = g.build_w(0);
    std::uint64_t steps = 0;
    for (std::uint64_t block = 0; steps < j; ++block) {
        for (std::size_t pos : g.h_indices(block)) {
            word.flip(pos);
            if (++steps == j) break;
        }
    }
    return word;
}

/// Explicit table of all N codewords, in order.
struct OracleGrayCode {
    explicit OracleGrayCode(const GrayCode& g) {
        check_small(g);
        BitString word = g.build_w(0);
        words.reserve(g.num_codewords());
        words.push_back(word);
        for (std::uint64_t block = 0; block < g.blocks(); ++block) {
            for (std::size_t pos : g.h_indices(block)) {
                word.flip(pos);
                if (words.size() < g.num_codewords()) words.push_back(word);
            }
        }
    }

    std::vector<BitString> words;
};

/// argmin_j of the distance from x to g_j, smallest j on ties. Walks the
/// flip sequence, updating the distance by +-1 per step.
inline std::uint64_t nearest_in_g(const GrayCode& g, const BitString& x) {
    check_small(g);
    if (x.size() != g.d()) throw std::invalid_argument("nearest_in_g: wrong length");
    BitString word = g.build_w(0);
    std::size_t dist = hamming_distance(x, word);
    std::uint64_t best_j = 0;
    std::size_t best_dist = dist;
    std::uint64_t j = 0;
    for (std::uint64_t block = 0; block < g.blocks(); ++block) {
        for (std::size_t pos : g.h_indices(block)) {
            dist += word.get(pos) == x.get(pos) ? 1 : -1;
            word.flip(pos);
            if (++j >= g.num_codewords()) break;
            if (dist < best_dist) {
                best_dist = dist;
                best_j = j;
            }
        }
    }
    return best_j;
}

}  // namespace rgc::oracle
