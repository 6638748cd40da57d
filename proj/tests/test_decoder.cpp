#include <doctest.h>

#include <memory>
#include <vector>

#include "conditioning.hpp"
#include "rgc/bitstring.hpp"
#include "rgc/channel.hpp"
#include "rgc/decoder.hpp"
#include "rgc/gray_code.hpp"
#include "rgc/linear_code.hpp"
#include "rgc/oracle.hpp"
#include "rgc/random.hpp"

using rgc::BitString;
using rgc::DecodeCase;
using rgc::GrayCode;
using rgc::RandomSource;

namespace {

std::vector<GrayCode> small_instances() {
    std::vector<GrayCode> out;
    out.push_back(GrayCode(std::make_shared<rgc::RepetitionCode>(3)));
    out.push_back(GrayCode(std::make_shared<rgc::RepetitionCode>(5)));
    out.push_back(GrayCode(std::make_shared<rgc::GenericLinearCode>(std::vector<BitString>{
        BitString::from_string("1110"), BitString::from_string("0111")})));
    out.push_back(GrayCode(std::make_shared<rgc::ReedMullerRM1>(2)));
    return out;
}

}  // namespace

TEST_CASE("majority") {
    RandomSource rng(3);
    CHECK(rgc::majority(BitString::from_string("101"), rng) == true);
    CHECK(rgc::majority(BitString::from_string("000"), rng) == false);
    CHECK_THROWS(rgc::majority(BitString(), rng));
    // even-length tie: a fair coin; both outcomes occur over seeds
    int ones = 0;
    for (int seed = 0; seed < 200; ++seed) {
        RandomSource r(seed);
        ones += rgc::majority(BitString::from_string("10"), r) ? 1 : 0;
    }
    CHECK(ones > 50);
    CHECK(ones < 150);
}

TEST_CASE("unary decode") {
    CHECK(rgc::unary_decode(BitString::from_string("11100")) == 3);
    CHECK(rgc::unary_decode(BitString::from_string("00000")) == 0);
    CHECK(rgc::unary_decode(BitString::from_string("11010")) == 2);  // tie to smallest
    CHECK(rgc::unary_decode(BitString()) == 0);
    CHECK(rgc::unary_decode(BitString::from_string("11111")) == 5);
}

TEST_CASE("unary decode is exact argmin") {
    RandomSource rng(4);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t len = 1 + rng.next_below(30);
        BitString x(len);
        for (std::size_t i = 0; i < len; ++i) x.set(i, rng.next_bit());
        const std::uint64_t v = rgc::unary_decode(x);
        std::size_t best = len + 1;
        std::uint64_t best_v = 0;
        for (std::uint64_t cand = 0; cand <= len; ++cand) {
            BitString u = BitString::ones(cand).concat(BitString::zeros(len - cand));
            const std::size_t dist = rgc::hamming_distance(x, u);
            if (dist < best) {
                best = dist;
                best_v = cand;
            }
        }
        CHECK(v == best_v);
    }
}

TEST_CASE("decode examples from the construction") {
    const GrayCode g(std::make_shared<rgc::RepetitionCode>(3));
    RandomSource rng(0);

    const auto r5 = rgc::decode_gray(g, BitString::from_string("111110000000000"), rng);
    CHECK(r5.j_hat == 5);
    CHECK(r5.case_taken == DecodeCase::case2);

    const auto r0 = rgc::decode_gray(g, BitString::from_string("000000000000000"), rng);
    CHECK(r0.j_hat == 0);
    CHECK(r0.case_taken == DecodeCase::case3);

    CHECK_THROWS(rgc::decode_gray(g, BitString::from_string("0000"), rng));
}

TEST_CASE("noiseless roundtrip, exhaustive") {
    for (const GrayCode& g : small_instances()) {
        RandomSource rng(1);
        for (std::uint64_t j = 0; j < g.num_codewords(); ++j) {
            const auto report = rgc::decode_gray(g, g.encode(j), rng);
            CHECK(report.j_hat == j);
        }
    }
}

TEST_CASE("noiseless decode agrees with nearest codeword search") {
    for (const GrayCode& g : small_instances()) {
        RandomSource rng(2);
        for (std::uint64_t j = 0; j < g.num_codewords(); ++j) {
            const BitString x = g.encode(j);
            CHECK(rgc::decode_gray(g, x, rng).j_hat == rgc::oracle::nearest_in_g(g, x));
        }
    }
}

TEST_CASE("conditional decoder guarantees under noise") {
    for (const GrayCode& g : small_instances()) {
        const std::uint64_t D = g.base_distance();
        const std::uint64_t d = g.d();
        const std::size_t n = g.n();
        RandomSource rng(5);
        for (int trial = 0; trial < 3000; ++trial) {
            const std::uint64_t j = rng.next_below(g.num_codewords());
            const BitString gj = g.encode(j);
            const BitString x = rgc::bsc_apply(gj, 0.05, rng);
            const auto report = rgc::decode_gray(g, x, rng);
            if (!rgc::testing::all_full_chunks_correct(g, j, report)) continue;

            const auto truth = rgc::testing::ground_truth(g, j);
            const std::uint64_t j_hat = report.j_hat;
            const std::uint64_t cyc = rgc::testing::cyclic_error(g, j, j_hat);

            // closer-codeword property
            CHECK(rgc::hamming_distance(x, g.encode(j_hat)) <= rgc::hamming_distance(x, gj));

            const bool mid = truth.crossover && *truth.crossover >= D &&
                             *truth.crossover < d - D;
            if (mid) {
                // in-block estimate with distance = index error
                const std::uint64_t ri = g.compute_r(truth.block);
                const std::uint64_t rn = g.compute_r(truth.block + 1);
                CHECK(j_hat >= ri);
                CHECK(j_hat < rn);
                CHECK(rgc::hamming_distance(gj, g.encode(j_hat)) ==
                      (j > j_hat ? j - j_hat : j_hat - j));
                // case dispatch soundness
                if (report.case_taken == DecodeCase::case1) {
                    CHECK(*truth.crossover >= n + D);
                } else if (report.case_taken == DecodeCase::case2) {
                    CHECK(*truth.crossover <= n + 2 * D);
                }
            } else {
                // near a block edge: in-block estimate, or an adjacent block
                // within 2D (cyclically)
                const std::uint64_t hat_block = g.locate_block(j_hat).block;
                if (hat_block == truth.block) {
                    CHECK(rgc::hamming_distance(gj, g.encode(j_hat)) ==
                          (j > j_hat ? j - j_hat : j_hat - j));
                } else {
                    const std::uint64_t prev = (truth.block + g.blocks() - 1) % g.blocks();
                    const std::uint64_t next = (truth.block + 1) % g.blocks();
                    CHECK((hat_block == prev || hat_block == next));
                    CHECK(cyc <= 2 * D);
                    CHECK(rgc::hamming_distance(gj, g.encode(j_hat)) == cyc);
                }
                if (report.case_taken == DecodeCase::case3 && truth.crossover) {
                    CHECK((*truth.crossover < D || *truth.crossover >= d - D));
                }
            }
        }
    }
}

TEST_CASE("restriction agreement outside the candidate crossover range") {
    for (const GrayCode& g : small_instances()) {
        const std::uint64_t D = g.base_distance();
        const std::uint64_t d = g.d();
        const std::size_t n = g.n();
        RandomSource rng(6);
        for (int trial = 0; trial < 1500; ++trial) {
            const std::uint64_t j = rng.next_below(g.num_codewords());
            const BitString gj = g.encode(j);
            const BitString x = rgc::bsc_apply(gj, 0.05, rng);
            const auto report = rgc::decode_gray(g, x, rng);
            if (!rgc::testing::all_full_chunks_correct(g, j, report)) continue;
            const BitString gh = g.encode(report.j_hat);
            switch (report.case_taken) {
                case DecodeCase::case1:
                    CHECK(gh.slice(0, n + D) == gj.slice(0, n + D));
                    break;
                case DecodeCase::case2:
                    CHECK(gh.slice(n + 2 * D, d) == gj.slice(n + 2 * D, d));
                    break;
                case DecodeCase::case3:
                    CHECK(gh.slice(D, d - D) == gj.slice(D, d - D));
                    break;
            }
        }
    }
}

TEST_CASE("decode report consistency") {
    const GrayCode g(std::make_shared<rgc::RepetitionCode>(5));
    RandomSource rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t j = rng.next_below(g.num_codewords());
        const BitString x = rgc::bsc_apply(g.encode(j), 0.1, rng);
        const auto report = rgc::decode_gray(g, x, rng);
        CHECK(report.j_hat < g.num_codewords());
        const auto [b1, b2, b3] = report.majority_bits;
        if (b1 == b2 && b2 == b3) {
            CHECK(report.case_taken == DecodeCase::case3);
            CHECK(report.u_values.size() == 2);
        } else if (b1 == b2) {
            CHECK(report.case_taken == DecodeCase::case1);
            CHECK(report.u_values.size() == 1);
        } else if (b2 == b3) {
            CHECK(report.case_taken == DecodeCase::case2);
        }
    }
}
