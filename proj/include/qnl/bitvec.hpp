#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qnl {

/// Fixed-length packed bit vector. Bit i lives in word i/64, position i%64.
/// Bits past size() are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    /// Parses a string of '0'/'1' characters, index 0 leftmost.
    static BitVec from_string(std::string_view bits);
    /// Low `n` bits of `value`.
    static BitVec from_word(std::size_t n, std::uint64_t value);

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= m;
        } else {
            words_[i >> 6] &= ~m;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }
    /// Parity of popcount(*this AND other).
    bool dot(const BitVec& other) const;

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend bool operator==(const BitVec&, const BitVec&) = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }
    /// Word 0 only; valid for size() <= 64.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    /// Index 0 leftmost.
    std::string to_string() const;

   private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order on bit strings written index 0 first, '0' < '1'.
bool lex_less(const BitVec& a, const BitVec& b);

}  // namespace qnl
