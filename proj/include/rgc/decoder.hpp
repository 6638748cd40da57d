#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rgc/bitstring.hpp"
#include "rgc/brc.hpp"
#include "rgc/gray_code.hpp"
#include "rgc/random.hpp"

namespace rgc {

enum class DecodeCase { case1 = 1, case2 = 2, case3 = 3 };

/// Decoder output with the intermediate quantities needed by property tests.
struct DecodeReport {
    std::uint64_t j_hat = 0;
    DecodeCase case_taken = DecodeCase::case3;
    std::uint64_t iota_hat = 0;
    std::vector<std::uint64_t> u_values;       // {u} in cases 1-2, {u1, u2} in case 3
    std::array<bool, 3> majority_bits{};       // b1, b2, b3
    std::array<std::uint64_t, 2> chunk_messages{};  // v1, v2 as integers
};

/// Majority bit; an exact tie is resolved by a fair coin from rng.
inline bool majority(const BitString& bits, RandomSource& rng) {
    if (bits.empty()) throw std::invalid_argument("majority: empty input");
    const std::size_t ones = bits.weight();
    if (2 * ones > bits.size()) return true;
    if (2 * ones < bits.size()) return false;
    return rng.next_bit();
}

/// Nearest unary codeword 1^v 0^{l-v}; ties broken toward the smallest v.
inline std::uint64_t unary_decode(const BitString& x) {
    // cost(v+1) = cost(v) - 1 if x[v] is 1, + 1 otherwise
    std::int64_t cost = std::int64_t(x.weight());
    std::int64_t best_cost = cost;
    std::uint64_t best_v = 0;
    for (std::size_t v = 0; v < x.size(); ++v) {
        cost += x.get(v) ? -1 : 1;
        if (cost < best_cost) {
            best_cost = cost;
            best_v = v + 1;
        }
    }
    return best_v;
}

namespace detail {

inline std::vector<std::size_t> truncated_h(const GrayCode& g, std::uint64_t i) {
    auto h = g.h_indices(i);
    h.pop_back();  // the last differing position belongs to the next block
    return h;
}

}  // namespace detail

/// The three-case decoder. All block arithmetic wraps modulo 2^k and the
/// returned index is reduced modulo N. Randomness is consumed only for
/// majority ties (none when D is odd).
inline DecodeReport decode_gray(const GrayCode& g, const BitString& x, RandomSource& rng) {
    if (x.size() != g.d()) throw std::invalid_argument("decode_gray: wrong input length");

    const std::uint64_t dist = g.base_distance();
    const std::size_t n = g.n();
    const std::uint64_t blocks = g.blocks();
    const std::uint64_t big_n = g.num_codewords();
    const LinearCode& base = g.base();

    const ChunkViews chunks = g.chunk_views(x);
    const BitString v1 = base.decode(chunks.c1);
    const BitString v2 = base.decode(chunks.c2);
    const bool b1 = majority(chunks.s1, rng);
    const bool b2 = majority(chunks.s2, rng);
    const bool b3 = majority(chunks.s3, rng);

    DecodeReport report;
    report.majority_bits = {b1, b2, b3};
    report.chunk_messages = {v1.as_uint(), v2.as_uint()};

    if (b1 != b3 && b2 == b1) {
        // Case 1: (1,1,0) or (0,0,1); c1 chunk should be c_{i+1}.
        report.case_taken = DecodeCase::case1;
        const std::uint64_t iota = brc_decode(v1);
        report.iota_hat = iota;
        const std::uint64_t i_est = (iota + blocks - 1) % blocks;
        const BitString c1_hat = g.order_codeword(i_est);
        const BitString c2_hat = base.encode(v1);
        const BitString w1_hat = g.build_w(i_est);
        std::vector<std::size_t> h_sel;
        for (std::size_t pos : detail::truncated_h(g, i_est)) {
            if (pos >= n + dist) h_sel.push_back(pos);
        }
        const std::uint64_t u = unary_decode(x.gather(h_sel) ^ w1_hat.gather(h_sel));
        report.u_values = {u};
        report.j_hat =
            (u + dist + hamming_distance(c1_hat, c2_hat) + g.compute_r(i_est)) % big_n;
    } else if (b1 != b3) {
        // Case 2: (0,1,1) or (1,0,0); c2 chunk should be c_i.
        report.case_taken = DecodeCase::case2;
        const std::uint64_t iota = brc_decode(v2);
        report.iota_hat = iota;
        const BitString w1_hat = g.build_w(iota);
        std::vector<std::size_t> h_sel;
        for (std::size_t pos : detail::truncated_h(g, iota)) {
            if (pos < n + 2 * dist) h_sel.push_back(pos);
        }
        const std::uint64_t u = unary_decode(x.gather(h_sel) ^ w1_hat.gather(h_sel));
        report.u_values = {u};
        report.j_hat = (u + g.compute_r(iota)) % big_n;
    } else {
        // Case 3: separators agree; the crossover sits near a block edge and
        // the block identity is ambiguous, so try both and keep the closer.
        report.case_taken = DecodeCase::case3;
        const std::uint64_t iota = brc_decode(v1);
        report.iota_hat = iota;
        const std::uint64_t i_prev = (iota + blocks - 1) % blocks;
        const BitString c1_hat = g.order_codeword(i_prev);
        const BitString c2_hat = base.encode(v1);
        const std::uint64_t u1 =
            unary_decode(x.slice(0, dist) ^ BitString::repeat(b1, dist));
        const std::uint64_t u2 =
            unary_decode(x.slice(g.d() - dist, g.d()) ^ BitString::repeat(!b1, dist));
        report.u_values = {u1, u2};
        const std::uint64_t j1 = (u1 + g.compute_r(iota)) % big_n;
        const std::uint64_t j2 = (u2 + 2 * dist + 2 * hamming_distance(c1_hat, c2_hat) +
                                  g.compute_r(i_prev)) %
                                 big_n;
        const std::size_t d1 = hamming_distance(x, g.encode(j1));
        const std::size_t d2 = hamming_distance(x, g.encode(j2));
        report.j_hat = d1 <= d2 ? j1 : j2;
    }
    return report;
}

}  // namespace rgc
