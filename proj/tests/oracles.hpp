#pragma once

// Naive reference implementations. Everything here works from the defining
// sums on plain integers and shares no code with the library beyond the
// input types.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "qnl/boolean.hpp"
#include "qnl/graph.hpp"
#include "qnl/stabilizer.hpp"

namespace oracle {

inline int bit(std::uint64_t x, std::size_t i) { return static_cast<int>((x >> i) & 1U); }
inline int parity(std::uint64_t x) { return std::popcount(x) & 1; }

/// Adjacency as 0/1 ints.
inline std::vector<std::vector<int>> matrix(const qnl::Graph& g) {
    std::vector<std::vector<int>> m(g.size(), std::vector<int>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = g.adjacent(i, j) ? 1 : 0;
    return m;
}

/// f(x) for the graph function, by the double sum.
inline int graph_function(const std::vector<std::vector<int>>& b, std::uint64_t x) {
    int s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) s += b[i][j] * bit(x, i) * bit(x, j);
    return s & 1;
}

inline std::vector<int> values(const qnl::TruthTable& t) {
    std::vector<int> f(t.length());
    for (std::uint64_t x = 0; x < t.length(); ++x) f[x] = t.value(x) ? 1 : 0;
    return f;
}

inline int sgn(int e) { return (e & 1) ? -1 : 1; }

/// sum_x (-1)^{f(x) + f(x^a) + b.x}
inline long long correlation(const std::vector<int>& f, std::uint64_t a, std::uint64_t b) {
    long long s = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) s += sgn(f[x] + f[x ^ a] + parity(b & x));
    return s;
}

/// Distance by the literal (a, b) scan; overlap counted once or twice.
inline std::size_t correlation_distance(const qnl::TruthTable& t, bool count_twice) {
    const auto f = values(t);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t a = 0; a < t.length(); ++a)
        for (std::uint64_t b = 0; b < t.length(); ++b) {
            if (a == 0 && b == 0) continue;
            const std::size_t w = count_twice ? std::popcount(a) + std::popcount(b) : std::popcount(a | b);
            if (w < best && correlation(f, a, b) != 0) best = w;
        }
    return best;
}

/// Every codeword of a code as (alpha, beta) words, by looping over subsets.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> all_codewords(const qnl::GeneratorMatrix& g) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << g.k()); ++u) {
        std::uint64_t a = 0, b = 0;
        for (std::size_t i = 0; i < g.k(); ++i)
            if (bit(u, i)) {
                a ^= g.row(i).alpha.low_word();
                b ^= g.row(i).beta.low_word();
            }
        out.emplace_back(a, b);
    }
    return out;
}

inline std::size_t min_weight(const qnl::GeneratorMatrix& g, bool binary) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto [a, b] : all_codewords(g)) {
        if (a == 0 && b == 0) continue;
        const std::size_t w = binary ? std::popcount(a) + std::popcount(b) : std::popcount(a | b);
        best = std::min(best, w);
    }
    return best;
}

/// alpha by scanning all 2^n vertex subsets.
inline std::size_t independence_number(const qnl::Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::uint64_t> adj(n);
    for (std::size_t i = 0; i < n; ++i) adj[i] = g.row(i).low_word();
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (bit(s, i) && (adj[i] & s)) ok = false;
        if (ok) best = std::max<std::size_t>(best, std::popcount(s));
    }
    return best;
}

/// Unnormalized {I,H,N} spectrum entry by the defining sum over the coset.
inline std::complex<long long> ihn_entry(const std::vector<int>& f, std::size_t n, std::uint64_t k, std::uint64_t c,
                                         std::uint64_t r, std::uint64_t mu) {
    static const std::complex<long long> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<long long> s = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        if ((x & mu) != r) continue;
        const long long sign = sgn(f[x] + parity(k & x));
        s += sign * powers[std::popcount(x & c) % 4];
    }
    return s;
}

/// Peak |(U s)_y|^2 with unitary normalization, as (numerator, log2 denominator).
/// Positions cycle through I, H and (when allowed) N.
inline std::pair<long long, int> par(const qnl::TruthTable& t, bool with_nega) {
    const std::size_t n = t.n();
    const auto f = values(t);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    long double best = 0;
    std::pair<long long, int> best_exact{0, 0};
    std::uint64_t choices = 1;
    for (std::size_t i = 0; i < n; ++i) choices *= with_nega ? 3 : 2;
    for (std::uint64_t code = 0; code < choices; ++code) {
        std::uint64_t mu = 0, c = 0, rest = code;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t digit = rest % (with_nega ? 3 : 2);
            rest /= with_nega ? 3 : 2;
            if (digit == 0) mu |= std::uint64_t{1} << i;
            if (digit == 2) c |= std::uint64_t{1} << i;
        }
        const std::uint64_t free = full & ~mu;
        const int m = std::popcount(free);
        for (std::uint64_t y = 0; y <= full; ++y) {
            const auto p = ihn_entry(f, n, y & free, c, y & mu, mu);
            const long long norm = p.real() * p.real() + p.imag() * p.imag();
            const long double v = static_cast<long double>(norm) / static_cast<long double>(1LL << m);
            if (v > best) {
                best = v;
                best_exact = {norm, m};
            }
        }
    }
    return best_exact;
}

}  // namespace oracle
