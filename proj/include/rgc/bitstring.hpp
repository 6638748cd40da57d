#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgc {

/// Fixed-length bit string over F2.
///
/// Position 0 is the leftmost bit of the textual form ("10110" has a 1 at
/// position 0). Addition of equal-length strings is bitwise XOR.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    static BitString zeros(std::size_t len) { return BitString(len); }

    static BitString repeat(bool bit, std::size_t len) {
        BitString s(len);
        if (bit) {
            for (auto& w : s.words_) w = ~UINT64_C(0);
            s.mask_tail();
        }
        return s;
    }

    static BitString ones(std::size_t len) { return repeat(true, len); }

    /// Parse from ASCII '0'/'1', position 0 first.
    static BitString from_string(const std::string& text) {
        BitString s(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                s.set(i, true);
            } else if (text[i] != '0') {
                throw std::invalid_argument("BitString: expected '0' or '1'");
            }
        }
        return s;
    }

    /// Build a length-len string whose significance-z bit (string position
    /// len-1-z) is bit z of value.
    static BitString from_uint(std::uint64_t value, std::size_t len) {
        if (len < 64 && (value >> len) != 0) {
            throw std::out_of_range("BitString::from_uint: value does not fit");
        }
        BitString s(len);
        for (std::size_t z = 0; z < len && z < 64; ++z) {
            if ((value >> z) & 1) s.set(len - 1 - z, true);
        }
        return s;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t pos) const {
        check_pos(pos);
        return (words_[pos >> 6] >> (pos & 63)) & 1;
    }

    void set(std::size_t pos, bool v) {
        check_pos(pos);
        const std::uint64_t mask = UINT64_C(1) << (pos & 63);
        if (v) {
            words_[pos >> 6] |= mask;
        } else {
            words_[pos >> 6] &= ~mask;
        }
    }

    void flip(std::size_t pos) {
        check_pos(pos);
        words_[pos >> 6] ^= UINT64_C(1) << (pos & 63);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }

    BitString operator^(const BitString& other) const {
        if (len_ != other.len_) {
            throw std::invalid_argument("BitString: length mismatch in XOR");
        }
        BitString out(len_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            out.words_[i] = words_[i] ^ other.words_[i];
        }
        return out;
    }

    BitString& operator^=(const BitString& other) {
        if (len_ != other.len_) {
            throw std::invalid_argument("BitString: length mismatch in XOR");
        }
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    bool operator==(const BitString& other) const {
        return len_ == other.len_ && words_ == other.words_;
    }
    bool operator!=(const BitString& other) const { return !(*this == other); }

    /// Substring [from, to); empty when from == to.
    BitString slice(std::size_t from, std::size_t to) const {
        if (from > to || to > len_) {
            throw std::out_of_range("BitString::slice: bad range");
        }
        BitString out(to - from);
        for (std::size_t i = from; i < to; ++i) {
            if (get(i)) out.set(i - from, true);
        }
        return out;
    }

    /// Bits at the given strictly ascending positions, in order.
    BitString gather(const std::vector<std::size_t>& positions) const {
        BitString out(positions.size());
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (i > 0 && positions[i] <= positions[i - 1]) {
                throw std::invalid_argument("BitString::gather: positions not ascending");
            }
            if (get(positions[i])) out.set(i, true);
        }
        return out;
    }

    BitString concat(const BitString& other) const {
        BitString out(len_ + other.len_);
        for (std::size_t i = 0; i < len_; ++i) {
            if (get(i)) out.set(i, true);
        }
        for (std::size_t i = 0; i < other.len_; ++i) {
            if (other.get(i)) out.set(len_ + i, true);
        }
        return out;
    }

    /// Positions where this and other differ, ascending.
    std::vector<std::size_t> diff_positions(const BitString& other) const {
        if (len_ != other.len_) {
            throw std::invalid_argument("BitString: length mismatch in diff_positions");
        }
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w] ^ other.words_[w];
            while (x != 0) {
                const int b = std::countr_zero(x);
                out.push_back((w << 6) + static_cast<std::size_t>(b));
                x &= x - 1;
            }
        }
        return out;
    }

    /// Read the string as an integer under the significance convention
    /// (bit z of the result is the bit at position size()-1-z).
    std::uint64_t as_uint() const {
        if (len_ > 64) throw std::out_of_range("BitString::as_uint: longer than 64 bits");
        std::uint64_t v = 0;
        for (std::size_t z = 0; z < len_; ++z) {
            if (get(len_ - 1 - z)) v |= UINT64_C(1) << z;
        }
        return v;
    }

    std::string str() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

private:
    static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

    void check_pos(std::size_t pos) const {
        if (pos >= len_) throw std::out_of_range("BitString: position out of range");
    }

    void mask_tail() {
        const std::size_t rem = len_ & 63;
        if (rem != 0 && !words_.empty()) {
            words_.back() &= (UINT64_C(1) << rem) - 1;
        }
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t hamming_weight(const BitString& x) { return x.weight(); }

inline std::size_t hamming_distance(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("hamming_distance: length mismatch");
    }
    return (x ^ y).weight();
}

}  // namespace rgc
