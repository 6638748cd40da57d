#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "rgc/bitstring.hpp"
#include "rgc/brc.hpp"
#include "rgc/linear_code.hpp"

namespace rgc {

/// Block-local position of a Gray index: j = r(block) + offset, with
/// 0 <= offset < delta_w(block).
struct BlockLocation {
    std::uint64_t block;
    std::uint64_t offset;
};

/// The five-chunk layout of a length-d word:
/// s1 [0,D) | c1 [D,D+n) | s2 [D+n,2D+n) | c2 [2D+n,2D+2n) | s3 [2D+2n,d).
struct ChunkViews {
    BitString s1, c1, s2, c2, s3;
};

/// The robust Gray code built from a linear base code.
///
/// Codewords of the base code are ordered along the binary reflected code,
/// embedded twice each between parity-alternating separator blocks to form
/// the intermediate words w_i, and consecutive w_i are joined by single-bit
/// interpolation steps. The code is closed cyclically: w_{2^k} = w_0.
class GrayCode {
public:
    explicit GrayCode(std::shared_ptr<const LinearCode> base) : base_(std::move(base)) {
        if (!base_) throw std::invalid_argument("GrayCode: null base code");
        if (base_->dimension() > 40) {
            throw std::invalid_argument("GrayCode: base dimension too large");
        }
        n_ = base_->block_length();
        k_ = base_->dimension();
        dist_ = base_->min_distance();
        d_ = 2 * n_ + 3 * dist_;
        num_codewords_ = compute_r(UINT64_C(1) << k_);
    }

    const LinearCode& base() const { return *base_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::uint64_t base_distance() const { return dist_; }
    std::uint64_t d() const { return d_; }
    std::uint64_t num_codewords() const { return num_codewords_; }  // N

    /// The i-th codeword of the base code along the Gray ordering.
    BitString order_codeword(std::uint64_t i) const {
        check_block(i, blocks() - 1);
        return base_->encode(brc_encode(i, unsigned(k_)));
    }

    /// w_i = s . c_i . s . c_i . s with s = 0^D for even i, 1^D for odd i.
    BitString build_w(std::uint64_t i) const {
        check_block(i, blocks() - 1);
        const BitString sep = BitString::repeat(i % 2 == 1, dist_);
        const BitString c = order_codeword(i);
        return sep.concat(c).concat(sep).concat(c).concat(sep);
    }

    /// Hamming distance between w_i and its successor (cyclically).
    std::uint64_t delta_w(std::uint64_t i) const {
        check_block(i, blocks() - 1);
        return 2 * base_->row_weight(flip_position(i, unsigned(k_))) + 3 * dist_;
    }

    /// Prefix sum r_i of W-distances, in O(k) via closed-form flip counts.
    std::uint64_t compute_r(std::uint64_t i) const {
        check_block(i, blocks());
        std::uint64_t r = 3 * dist_ * i;
        for (unsigned z = 0; z < k_; ++z) {
            r += 2 * flip_count(i, z, unsigned(k_)) * base_->row_weight(z);
        }
        if (i == blocks()) r += 2 * base_->row_weight(k_ - 1);  // wrap step
        return r;
    }

    /// Inverse of compute_r: binary search for the block holding index j.
    BlockLocation locate_block(std::uint64_t j) const {
        if (j >= num_codewords_) throw std::out_of_range("GrayCode::locate_block: j out of range");
        std::uint64_t lo = 0, hi = blocks();  // invariant: r(lo) <= j < r(hi)
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (compute_r(mid) <= j) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return {lo, j - compute_r(lo)};
    }

    /// All positions where w_i and its successor differ, ascending. The
    /// full list is returned; the decoder drops the last entry, since that
    /// flip belongs to the next block.
    std::vector<std::size_t> h_indices(std::uint64_t i) const {
        check_block(i, blocks() - 1);
        return build_w(i).diff_positions(build_w((i + 1) % blocks()));
    }

    /// The j-th Gray codeword: w_i with the first offset entries of
    /// h_indices(i) flipped toward w_{i+1}.
    BitString encode(std::uint64_t j) const {
        const BlockLocation loc = locate_block(j);
        BitString g = build_w(loc.block);
        if (loc.offset > 0) {
            const auto h = h_indices(loc.block);
            for (std::uint64_t t = 0; t < loc.offset; ++t) g.flip(h[t]);
        }
        return g;
    }

    ChunkViews chunk_views(const BitString& x) const {
        if (x.size() != d_) throw std::invalid_argument("GrayCode::chunk_views: wrong length");
        const std::uint64_t D = dist_;
        return {x.slice(0, D), x.slice(D, D + n_), x.slice(D + n_, 2 * D + n_),
                x.slice(2 * D + n_, 2 * D + 2 * n_), x.slice(2 * D + 2 * n_, d_)};
    }

    std::uint64_t blocks() const { return UINT64_C(1) << k_; }

private:
    void check_block(std::uint64_t i, std::uint64_t limit) const {
        if (i > limit) throw std::out_of_range("GrayCode: block index out of range");
    }

    std::shared_ptr<const LinearCode> base_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::uint64_t dist_ = 0;
    std::uint64_t d_ = 0;
    std::uint64_t num_codewords_ = 0;
};

}  // namespace rgc
