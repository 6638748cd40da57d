#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgc/bitstring.hpp"

namespace rgc {

/// A binary linear code [n, k, D] given by a full-rank generator matrix.
///
/// encode(v) XORs the rows a_z selected by the 1-bits of the message v,
/// where bit z of v follows the significance convention of rgc/brc.hpp
/// (row index z = significance z). decode returns a message whose encoding
/// is a nearest codeword; ties go to the smallest message integer.
class LinearCode {
public:
    virtual ~LinearCode() = default;

    std::size_t block_length() const { return n_; }
    std::size_t dimension() const { return k_; }
    std::uint64_t min_distance() const { return min_distance_; }

    const BitString& row(std::size_t z) const {
        if (z >= k_) throw std::out_of_range("LinearCode::row: z out of range");
        return rows_[z];
    }

    /// O(1), from the table precomputed at construction.
    std::uint64_t row_weight(std::size_t z) const {
        if (z >= k_) throw std::out_of_range("LinearCode::row_weight: z out of range");
        return row_weights_[z];
    }

    BitString encode(const BitString& message) const {
        if (message.size() != k_) {
            throw std::invalid_argument("LinearCode::encode: message length != k");
        }
        BitString c(n_);
        for (std::size_t z = 0; z < k_; ++z) {
            if (message.get(k_ - 1 - z)) c ^= rows_[z];
        }
        return c;
    }

    BitString encode_uint(std::uint64_t message) const {
        return encode(BitString::from_uint(message, k_));
    }

    virtual BitString decode(const BitString& received) const = 0;

    /// Worst-case-message failure event, evaluated with the all-zeros
    /// codeword transmitted: true when some other codeword is at least as
    /// close to `received` as all-zeros. Under the deterministic tie rule a
    /// tied competitor defeats the least-favoured message, so ties count as
    /// failures; this makes the Monte Carlo estimate cover the maximum over
    /// messages even though only one codeword is transmitted. The default
    /// is exact for decoders that can never tie.
    virtual bool zero_word_ml_failure(const BitString& received) const {
        return decode(received) != BitString(k_);
    }

    virtual std::string name() const = 0;

    /// True iff the rows are linearly independent over F2.
    static bool is_full_rank(const std::vector<BitString>& rows) { return full_rank(rows); }

protected:
    LinearCode(std::size_t n, std::size_t k) : n_(n), k_(k) {
        if (n == 0 || k == 0 || k > n) {
            throw std::invalid_argument("LinearCode: need 0 < k <= n");
        }
    }

    /// Install generator rows; verifies full rank and fills the weight table.
    void set_rows(std::vector<BitString> rows) {
        if (rows.size() != k_) throw std::invalid_argument("LinearCode: wrong row count");
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("LinearCode: wrong row length");
        }
        if (!full_rank(rows)) {
            throw std::invalid_argument("LinearCode: generator rows are linearly dependent");
        }
        rows_ = std::move(rows);
        row_weights_.clear();
        for (const auto& r : rows_) row_weights_.push_back(r.weight());
    }

    void set_min_distance(std::uint64_t d) { min_distance_ = d; }

    static bool full_rank(const std::vector<BitString>& rows) {
        std::vector<BitString> m = rows;  // Gaussian elimination over F2
        std::size_t rank = 0;
        const std::size_t n = m.empty() ? 0 : m[0].size();
        for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < m.size() && !m[pivot].get(col)) ++pivot;
            if (pivot == m.size()) continue;
            std::swap(m[rank], m[pivot]);
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r != rank && m[r].get(col)) m[r] ^= m[rank];
            }
            ++rank;
        }
        return rank == rows.size();
    }

    std::size_t n_;
    std::size_t k_;
    std::uint64_t min_distance_ = 0;
    std::vector<BitString> rows_;
    std::vector<std::uint64_t> row_weights_;
};

/// [n, 1, n] repetition code, n odd; decode is exact majority.
class RepetitionCode final : public LinearCode {
public:
    explicit RepetitionCode(std::size_t n) : LinearCode(n, 1) {
        if (n % 2 == 0) throw std::invalid_argument("RepetitionCode: n must be odd");
        set_rows({BitString::ones(n)});
        set_min_distance(n);
    }

    BitString decode(const BitString& received) const override {
        if (received.size() != n_) {
            throw std::invalid_argument("RepetitionCode::decode: wrong length");
        }
        const bool bit = 2 * received.weight() > n_;  // n odd, no ties
        return BitString::from_uint(bit ? 1 : 0, 1);
    }

    std::string name() const override { return "repetition(" + std::to_string(n_) + ")"; }

    /// Exact ML failure probability on BSC(p): Pr[Binomial(n, p) > n/2].
    static double pfail_analytic(std::size_t n, double p) {
        if (n % 2 == 0) throw std::invalid_argument("pfail_analytic: n must be odd");
        if (p < 0.0 || p > 0.5) throw std::invalid_argument("pfail_analytic: need p in [0, 1/2]");
        double total = 0.0;
        for (std::size_t j = n / 2 + 1; j <= n; ++j) {
            const double log_term = std::lgamma(double(n) + 1) - std::lgamma(double(j) + 1) -
                                    std::lgamma(double(n - j) + 1) +
                                    double(j) * std::log(p) +
                                    double(n - j) * std::log1p(-p);
            total += std::exp(log_term);
        }
        if (p == 0.0) return 0.0;
        return total;
    }

    double pfail_analytic(double p) const { return pfail_analytic(n_, p); }
};

/// Arbitrary generator matrix; distance and decoding by brute force over all
/// 2^k codewords. Guarded to k <= 16, n <= 64 to keep misuse loud.
class GenericLinearCode final : public LinearCode {
public:
    explicit GenericLinearCode(std::vector<BitString> rows)
        : LinearCode(rows.empty() ? 1 : rows[0].size(), rows.size()) {
        if (k_ > 16 || n_ > 64) {
            throw std::invalid_argument("GenericLinearCode: limited to k <= 16, n <= 64");
        }
        set_rows(std::move(rows));
        std::uint64_t d = n_;
        for (std::uint64_t v = 1; v < (UINT64_C(1) << k_); ++v) {
            d = std::min<std::uint64_t>(d, encode_uint(v).weight());
        }
        set_min_distance(d);
    }

    BitString decode(const BitString& received) const override {
        if (received.size() != n_) {
            throw std::invalid_argument("GenericLinearCode::decode: wrong length");
        }
        std::uint64_t best_msg = 0;
        std::size_t best_dist = hamming_distance(received, encode_uint(0));
        for (std::uint64_t v = 1; v < (UINT64_C(1) << k_); ++v) {
            const std::size_t dist = hamming_distance(received, encode_uint(v));
            if (dist < best_dist) {
                best_dist = dist;
                best_msg = v;
            }
        }
        return BitString::from_uint(best_msg, k_);
    }

    bool zero_word_ml_failure(const BitString& received) const override {
        if (received.size() != n_) {
            throw std::invalid_argument("GenericLinearCode::zero_word_ml_failure: wrong length");
        }
        const std::size_t zero_dist = received.weight();
        for (std::uint64_t v = 1; v < (UINT64_C(1) << k_); ++v) {
            if (hamming_distance(received, encode_uint(v)) <= zero_dist) return true;
        }
        return false;
    }

    std::string name() const override {
        return "generic(k=" + std::to_string(k_) + ",n=" + std::to_string(n_) + ")";
    }
};

/// First-order Reed-Muller code RM(1, m): n = 2^m, k = m + 1, D = 2^{m-1}.
///
/// Row a_0 is all-ones; row a_z (z >= 1) evaluates bit z-1 of the point
/// index. Decoding correlates against all affine functions with a fast
/// Hadamard transform and returns an exact ML codeword.
class ReedMullerRM1 final : public LinearCode {
public:
    explicit ReedMullerRM1(unsigned m)
        : LinearCode(std::size_t(1) << m, m + 1), m_(m) {
        if (m == 0 || m > 20) throw std::invalid_argument("ReedMullerRM1: need 1 <= m <= 20");
        std::vector<BitString> rows;
        rows.push_back(BitString::ones(n_));
        for (unsigned z = 1; z <= m; ++z) {
            BitString r(n_);
            for (std::size_t p = 0; p < n_; ++p) {
                if ((p >> (z - 1)) & 1) r.set(p, true);
            }
            rows.push_back(std::move(r));
        }
        set_rows(std::move(rows));
        set_min_distance(UINT64_C(1) << (m - 1));
    }

    unsigned m() const { return m_; }

    BitString decode(const BitString& received) const override {
        if (received.size() != n_) {
            throw std::invalid_argument("ReedMullerRM1::decode: wrong length");
        }
        const std::vector<std::int64_t> t = correlations(received);
        std::uint64_t best_msg = t[0] < 0 ? 1 : 0;
        std::int64_t best_corr = t[0] >= 0 ? t[0] : -t[0];
        for (std::size_t q = 1; q < n_; ++q) {
            const std::int64_t corr = t[q] >= 0 ? t[q] : -t[q];
            if (corr > best_corr) {
                best_corr = corr;
                best_msg = (std::uint64_t(q) << 1) | (t[q] < 0 ? 1 : 0);
            }
        }
        return BitString::from_uint(best_msg, k_);
    }

    bool zero_word_ml_failure(const BitString& received) const override {
        if (received.size() != n_) {
            throw std::invalid_argument("ReedMullerRM1::zero_word_ml_failure: wrong length");
        }
        // Message 0 has correlation T[0]; its complement has -T[0]; every
        // other message has |T[q]|. Failure when any of them reaches T[0].
        const std::vector<std::int64_t> t = correlations(received);
        if (-t[0] >= t[0]) return true;
        for (std::size_t q = 1; q < n_; ++q) {
            const std::int64_t corr = t[q] >= 0 ? t[q] : -t[q];
            if (corr >= t[0]) return true;
        }
        return false;
    }

    std::string name() const override { return "rm1(" + std::to_string(m_) + ")"; }

private:
    // T[q] = sum_p (-1)^{x_p + <q, p>}; the codeword for message (eps, q)
    // has distance (n -+ T[q]) / 2.
    std::vector<std::int64_t> correlations(const BitString& received) const {
        std::vector<std::int64_t> t(n_);
        for (std::size_t p = 0; p < n_; ++p) t[p] = received.get(p) ? -1 : 1;
        for (std::size_t half = 1; half < n_; half <<= 1) {
            for (std::size_t block = 0; block < n_; block += 2 * half) {
                for (std::size_t i = block; i < block + half; ++i) {
                    const std::int64_t a = t[i];
                    const std::int64_t b = t[i + half];
                    t[i] = a + b;
                    t[i + half] = a - b;
                }
            }
        }
        return t;
    }

    unsigned m_;
};

/// Loads the plain-text matrix format: first line "k n", then k rows of n
/// characters from {0,1} (row a_0 first).
inline std::shared_ptr<const LinearCode> load_generator_matrix(std::istream& in) {
    std::size_t k = 0, n = 0;
    if (!(in >> k >> n)) throw std::invalid_argument("matrix file: missing 'k n' header");
    std::vector<BitString> rows;
    for (std::size_t r = 0; r < k; ++r) {
        std::string line;
        if (!(in >> line)) throw std::invalid_argument("matrix file: missing row");
        if (line.size() != n) throw std::invalid_argument("matrix file: row length != n");
        rows.push_back(BitString::from_string(line));
    }
    return std::make_shared<GenericLinearCode>(std::move(rows));
}

}  // namespace rgc
