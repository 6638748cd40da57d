#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rgc/bitstring.hpp"
#include "rgc/decoder.hpp"
#include "rgc/gray_code.hpp"
#include "rgc/linear_code.hpp"
#include "rgc/random.hpp"

namespace rgc {

/// Flip each bit independently with probability p.
inline BitString bsc_apply(const BitString& x, double p, RandomSource& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bsc_apply: p out of range");
    BitString out = x;
    if (p == 0.0) return out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (rng.bernoulli(p)) out.flip(i);
    }
    return out;
}

/// Proportion estimate with a 95% Wilson score interval.
struct Estimate {
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
};

inline Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson_estimate: zero trials");
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double nt = double(trials);
    const double phat = double(successes) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = (phat + z2 / (2.0 * nt)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)) / denom;
    // At the boundaries center - half is analytically 0 (resp. center + half is
    // 1); pin the endpoints so rounding residue cannot leak through.
    const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {phat, lo, hi, successes, trials};
}

/// Standard error of a proportion estimate.
inline double proportion_stderr(double phat, std::uint64_t trials) {
    return std::sqrt(std::max(phat * (1.0 - phat), 1.0 / double(trials)) / double(trials));
}

constexpr std::uint64_t kTrialBatch = 4096;

/// Monte Carlo estimate of the worst-case-message failure probability of
/// the base code on BSC(p).
///
/// Transmits the all-zeros codeword (noise statistics are the same for
/// every codeword over a symmetric channel) and counts a failure whenever
/// another codeword is at least as close as the transmitted one; ties must
/// count because the deterministic tie rule defeats the least-favoured
/// message, and the failure probability is defined as a maximum over
/// messages.
inline Estimate estimate_pfail(const LinearCode& code, double p, std::uint64_t trials,
                               std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("estimate_pfail: need trials >= 1");
    const BitString zero_word = BitString::zeros(code.block_length());
    std::uint64_t failures = 0;
    for (std::uint64_t start = 0; start < trials; start += kTrialBatch) {
        RandomSource rng = RandomSource::derived(seed, start / kTrialBatch);
        const std::uint64_t stop = std::min(trials, start + kTrialBatch);
        for (std::uint64_t t = start; t < stop; ++t) {
            const BitString noisy = bsc_apply(zero_word, p, rng);
            if (code.zero_word_ml_failure(noisy)) ++failures;
        }
    }
    return wilson_estimate(failures, trials);
}

/// Constants of the tail bound gamma * exp(-alpha * t) + 5 * P_fail.
struct BoundParams {
    double alpha;
    double gamma;
};

inline BoundParams bound_params(double p) {
    if (p <= 0.0 || p >= 0.5) throw std::invalid_argument("bound_params: need p in (0, 1/2)");
    const double alpha = (1.0 - 2.0 * p) * (1.0 - 2.0 * p) / (4.0 * p + 2.0);
    const double gamma = 2.0 / (1.0 - std::exp(-alpha));
    return {alpha, gamma};
}

struct TailPoint {
    std::uint64_t t = 0;
    std::uint64_t count_gt = 0;      // trials with cyclic error > t
    std::uint64_t count_ge = 0;      // trials with cyclic error >= t
    std::uint64_t count_line_gt = 0; // same, non-cyclic |j - jhat|
    double freq = 0.0;               // count_gt / trials
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double bound = 0.0;              // gamma exp(-alpha t) + 5 * pfail upper CI
};

struct ExperimentResult {
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Estimate pfail;
    BoundParams bound{0.0, 0.0};
    std::vector<TailPoint> tail;
};

/// Transmit random indices through BSC(p) and tabulate the decoding-error
/// tail against the analytic bound. Deterministic for a fixed seed; trials
/// run in fixed-size batches with per-batch derived streams, so the result
/// does not depend on scheduling.
inline ExperimentResult run_tail_experiment(const GrayCode& g, double p,
                                            std::uint64_t trials,
                                            const std::vector<std::uint64_t>& t_values,
                                            std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("run_tail_experiment: need trials >= 1");
    for (std::size_t i = 1; i < t_values.size(); ++i) {
        if (t_values[i] <= t_values[i - 1]) {
            throw std::invalid_argument("run_tail_experiment: t values must ascend");
        }
    }

    ExperimentResult result;
    result.p = p;
    result.trials = trials;
    result.seed = seed;
    if (p > 0.0) result.bound = bound_params(p);
    result.pfail = estimate_pfail(g.base(), p, trials, RandomSource::splitmix64(seed));

    const std::uint64_t big_n = g.num_codewords();
    std::vector<std::uint64_t> gt(t_values.size(), 0);
    std::vector<std::uint64_t> ge(t_values.size(), 0);
    std::vector<std::uint64_t> line_gt(t_values.size(), 0);

    for (std::uint64_t start = 0; start < trials; start += kTrialBatch) {
        RandomSource rng = RandomSource::derived(seed, start / kTrialBatch);
        const std::uint64_t stop = std::min(trials, start + kTrialBatch);
        for (std::uint64_t t = start; t < stop; ++t) {
            const std::uint64_t j = rng.next_below(big_n);
            const BitString x = bsc_apply(g.encode(j), p, rng);
            const std::uint64_t j_hat = decode_gray(g, x, rng).j_hat;
            const std::uint64_t line = j > j_hat ? j - j_hat : j_hat - j;
            const std::uint64_t cyc = std::min(line, big_n - line);
            for (std::size_t idx = 0; idx < t_values.size(); ++idx) {
                if (cyc > t_values[idx]) ++gt[idx];
                if (cyc >= t_values[idx]) ++ge[idx];
                if (line > t_values[idx]) ++line_gt[idx];
            }
        }
    }

    for (std::size_t idx = 0; idx < t_values.size(); ++idx) {
        TailPoint pt;
        pt.t = t_values[idx];
        pt.count_gt = gt[idx];
        pt.count_ge = ge[idx];
        pt.count_line_gt = line_gt[idx];
        const Estimate e = wilson_estimate(gt[idx], trials);
        pt.freq = e.value;
        pt.ci_lo = e.ci_lo;
        pt.ci_hi = e.ci_hi;
        pt.bound = p > 0.0 ? result.bound.gamma * std::exp(-result.bound.alpha *
                                                           double(t_values[idx])) +
                                 5.0 * result.pfail.ci_hi
                           : 0.0;
        result.tail.push_back(pt);
    }
    return result;
}

}  // namespace rgc
