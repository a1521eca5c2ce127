#include "qnl/bitvec.hpp"

#include "qnl/errors.hpp"

namespace qnl {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw FormatError("expected '0' or '1' at index " + std::to_string(i) + ", got '" +
                              std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_word(std::size_t n, std::uint64_t value) {
    BitVec v(n);
    if (n == 0) return v;
    if (n < 64) value &= (std::uint64_t{1} << n) - 1;
    v.words_[0] = value;
    return v;
}

bool BitVec::dot(const BitVec& other) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool lex_less(const BitVec& a, const BitVec& b) {
    for (std::size_t w = 0; w < a.num_words(); ++w) {
        std::uint64_t diff = a.words()[w] ^ b.words()[w];
        if (diff) {
            int p = std::countr_zero(diff);
            return ((a.words()[w] >> p) & 1U) == 0;
        }
    }
    return false;
}

}  // namespace qnl
