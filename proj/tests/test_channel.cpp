#include <doctest.h>

#include <cmath>
#include <memory>

#include "rgc/channel.hpp"
#include "rgc/gray_code.hpp"
#include "rgc/linear_code.hpp"
#include "rgc/random.hpp"

using rgc::BitString;
using rgc::GrayCode;
using rgc::RandomSource;

TEST_CASE("bsc_apply") {
    RandomSource rng(1);
    const BitString x = BitString::from_string("0101010101");
    CHECK(rgc::bsc_apply(x, 0.0, rng) == x);

    RandomSource a(42), b(42);
    CHECK(rgc::bsc_apply(BitString::zeros(64), 0.3, a) ==
          rgc::bsc_apply(BitString::zeros(64), 0.3, b));

    // mean flip count near p * length
    RandomSource c(7);
    std::size_t flips = 0;
    const int reps = 2000;
    for (int i = 0; i < reps; ++i) flips += rgc::bsc_apply(BitString::zeros(50), 0.45, c).weight();
    const double mean = double(flips) / reps;
    CHECK(mean > 0.40 * 50);
    CHECK(mean < 0.50 * 50);
}

TEST_CASE("wilson interval basics") {
    const auto e = rgc::wilson_estimate(0, 100);
    CHECK(e.value == 0.0);
    CHECK(e.ci_lo == 0.0);
    CHECK(e.ci_hi > 0.0);
    CHECK(e.ci_hi < 0.05);
    const auto h = rgc::wilson_estimate(50, 100);
    CHECK(h.ci_lo < 0.5);
    CHECK(h.ci_hi > 0.5);
}

TEST_CASE("estimate_pfail") {
    const rgc::RepetitionCode rep(3);
    CHECK(rgc::estimate_pfail(rep, 0.0, 1000, 1).value == 0.0);

    const auto e = rgc::estimate_pfail(rep, 0.1, 200000, 2);
    const double analytic = rgc::RepetitionCode::pfail_analytic(3, 0.1);
    CHECK(e.ci_lo <= analytic);
    CHECK(e.ci_hi >= analytic);

    // deterministic for a fixed seed
    const auto f = rgc::estimate_pfail(rep, 0.1, 200000, 2);
    CHECK(e.successes == f.successes);
}

TEST_CASE("bound_params") {
    const auto b1 = rgc::bound_params(0.1);
    CHECK(b1.alpha == doctest::Approx(0.64 / 2.4).epsilon(1e-12));
    CHECK(b1.gamma == doctest::Approx(2.0 / (1.0 - std::exp(-0.64 / 2.4))).epsilon(1e-12));
    const auto b2 = rgc::bound_params(0.25);
    CHECK(b2.alpha == doctest::Approx(0.25 / 3.0).epsilon(1e-12));
    const auto b3 = rgc::bound_params(1e-9);
    CHECK(b3.alpha == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(b3.gamma == doctest::Approx(2.0 / (1.0 - std::exp(-0.5))).epsilon(1e-5));
    CHECK_THROWS(rgc::bound_params(0.5));
    CHECK_THROWS(rgc::bound_params(0.0));
}

TEST_CASE("tail experiment at p = 0 is error free") {
    const GrayCode g(std::make_shared<rgc::RepetitionCode>(7));
    const auto result = rgc::run_tail_experiment(g, 0.0, 2000, {1, 2, 4}, 5);
    for (const auto& pt : result.tail) {
        CHECK(pt.count_gt == 0);
        CHECK(pt.freq == 0.0);
    }
}

TEST_CASE("tail experiment determinism and monotonicity") {
    const GrayCode g(std::make_shared<rgc::RepetitionCode>(7));
    const auto a = rgc::run_tail_experiment(g, 0.1, 20000, {1, 2, 4, 8, 16}, 9);
    const auto b = rgc::run_tail_experiment(g, 0.1, 20000, {1, 2, 4, 8, 16}, 9);
    for (std::size_t i = 0; i < a.tail.size(); ++i) {
        CHECK(a.tail[i].count_gt == b.tail[i].count_gt);
        if (i > 0) CHECK(a.tail[i].count_gt <= a.tail[i - 1].count_gt);
        CHECK(a.tail[i].count_ge >= a.tail[i].count_gt);
    }
    CHECK(a.pfail.successes == b.pfail.successes);
}

TEST_CASE("tail vanishes beyond half the code size") {
    const GrayCode g(std::make_shared<rgc::RepetitionCode>(7));
    const std::uint64_t half = g.num_codewords() / 2;
    const auto result = rgc::run_tail_experiment(g, 0.05, 5000, {half}, 11);
    CHECK(result.tail[0].count_gt == 0);
}

TEST_CASE("majority flip rate at most pfail, statistically") {
    // s-chunk failure vs code failure comparison at p in {0.05, 0.1}
    for (double p : {0.05, 0.1}) {
        const rgc::RepetitionCode rep(5);
        const std::uint64_t trials = 100000;
        const auto pf = rgc::estimate_pfail(rep, p, trials, 21);
        RandomSource rng(22);
        std::uint64_t flips = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const BitString noise = rgc::bsc_apply(BitString::zeros(rep.min_distance()), p, rng);
            if (rgc::majority(noise, rng)) ++flips;
        }
        const double maj_rate = double(flips) / double(trials);
        const double joint_se = rgc::proportion_stderr(maj_rate, trials) +
                                rgc::proportion_stderr(pf.value, trials);
        CHECK(maj_rate <= pf.value + 3 * joint_se);
    }
}

TEST_CASE("pairwise distance comparison obeys the exponential bound") {
    RandomSource rng(31);
    const auto bp = rgc::bound_params(0.1);
    for (std::size_t delta : {4, 8, 16}) {
        const std::size_t len = 64;
        BitString x1(len);
        BitString x2 = x1;
        for (std::size_t i = 0; i < delta; ++i) x2.flip(i);
        const std::uint64_t trials = 50000;
        std::uint64_t closer = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const BitString y = rgc::bsc_apply(x1, 0.1, rng);
            if (rgc::hamming_distance(x2, y) <= rgc::hamming_distance(x1, y)) ++closer;
        }
        const double rate = double(closer) / double(trials);
        const double bound = std::exp(-bp.alpha * double(delta));
        CHECK(rate <= bound + 3 * rgc::proportion_stderr(rate, trials));
    }
}
