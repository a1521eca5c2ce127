#include "qnl/boolean.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "qnl/errors.hpp"

namespace qnl {

std::string to_string(GaussianInt z) { return "(" + std::to_string(z.re) + "," + std::to_string(z.im) + ")"; }

namespace {

void check_vars(std::size_t n) {
    if (n < 1 || n > kMaxTruthTableVars)
        throw LimitError("truth tables support 1.." + std::to_string(kMaxTruthTableVars) + " variables, got " +
                         std::to_string(n));
}

void check_mask(const TruthTable& t, Mask m, const char* name) {
    if (m.bits & ~t.full_mask())
        throw PreconditionError(std::string("mask ") + name + " has bits beyond n=" + std::to_string(t.n()));
}

void require_precedes(Mask x, Mask y, const char* what) {
    if (!precedes(x, y)) throw PreconditionError(std::string("precondition failed: ") + what);
}

std::uint64_t parity(std::uint64_t x) { return static_cast<std::uint64_t>(std::popcount(x) & 1); }

// sum over x = base | s, s ranging over the submasks of `free`.
template <typename Term>
std::int64_t coset_sum(std::uint64_t base, std::uint64_t free, Term&& term) {
    std::int64_t acc = 0;
    for (std::uint64_t s = free;; s = (s - 1) & free) {
        acc += term(base | s);
        if (s == 0) break;
    }
    return acc;
}

}  // namespace

TruthTable::TruthTable(std::size_t n) : n_(n) {
    check_vars(n);
    values_ = BitVec(std::size_t{1} << n);
}

TruthTable::TruthTable(std::size_t n, BitVec values) : n_(n), values_(std::move(values)) {
    check_vars(n);
    if (values_.size() != (std::size_t{1} << n))
        throw DimensionError("truth table for n=" + std::to_string(n) + " needs " +
                             std::to_string(std::size_t{1} << n) + " entries, got " +
                             std::to_string(values_.size()));
}

TruthTable TruthTable::from_signs(std::size_t n, const std::string& signs) {
    check_vars(n);
    if (signs.size() != (std::size_t{1} << n))
        throw FormatError("sign string has " + std::to_string(signs.size()) + " characters, expected " +
                          std::to_string(std::size_t{1} << n));
    BitVec v(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == '-') {
            v.set(i);
        } else if (signs[i] != '+') {
            throw FormatError("expected '+' or '-' at index " + std::to_string(i));
        }
    }
    return TruthTable(n, std::move(v));
}

std::string TruthTable::to_signs() const {
    std::string s(length(), '+');
    for (std::uint64_t x = 0; x < length(); ++x)
        if (value(x)) s[x] = '-';
    return s;
}

TruthTable from_graph(const Graph& b) {
    const std::size_t n = b.size();
    check_vars(n);
    BitVec values(std::size_t{1} << n);
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
        const std::size_t top = static_cast<std::size_t>(std::bit_width(x)) - 1;
        const std::uint64_t rest = x ^ (std::uint64_t{1} << top);
        values.set(x, values.get(rest) != static_cast<bool>(parity(b.row(top).low_word() & rest)));
    }
    return TruthTable(n, std::move(values));
}

std::vector<std::int64_t> wht(const TruthTable& t) {
    std::vector<std::int64_t> w(t.length());
    for (std::uint64_t x = 0; x < t.length(); ++x) w[x] = t.sign(x);
    for (std::uint64_t half = 1; half < t.length(); half <<= 1)
        for (std::uint64_t base = 0; base < t.length(); base += 2 * half)
            for (std::uint64_t x = base; x < base + half; ++x) {
                std::int64_t a = w[x];
                std::int64_t c = w[x + half];
                w[x] = a + c;
                w[x + half] = a - c;
            }
    return w;
}

std::int64_t periodic_autocorrelation(const TruthTable& t, Mask a) {
    check_mask(t, a, "a");
    return coset_sum(0, t.full_mask(), [&](std::uint64_t x) { return t.sign(x) * t.sign(x ^ a.bits); });
}

std::int64_t aperiodic_autocorrelation(const TruthTable& t, Mask a, Mask k) {
    check_mask(t, a, "a");
    check_mask(t, k, "k");
    require_precedes(k, a, "k must precede a");
    return coset_sum(k.bits, t.full_mask() & ~a.bits,
                     [&](std::uint64_t x) { return t.sign(x) * t.sign(x ^ a.bits); });
}

std::int64_t fixed_aperiodic_autocorrelation(const TruthTable& t, Mask a, Mask mu, Mask k) {
    check_mask(t, a, "a");
    check_mask(t, mu, "mu");
    check_mask(t, k, "k");
    require_precedes(a, mu, "a must precede mu");
    require_precedes(k, mu, "k must precede mu");
    return coset_sum(k.bits, t.full_mask() & ~mu.bits,
                     [&](std::uint64_t x) { return t.sign(x) * t.sign(x ^ a.bits); });
}

std::int64_t fixed_extended_autocorrelation(const TruthTable& t, Mask a, Mask mu, Mask k) {
    check_mask(t, a, "a");
    check_mask(t, mu, "mu");
    check_mask(t, k, "k");
    require_precedes(k, mu, "k must precede mu");
    return coset_sum(k.bits, t.full_mask() & ~mu.bits,
                     [&](std::uint64_t x) { return t.sign(x) * t.sign(x ^ a.bits); });
}

GaussianInt ihn_spectrum(const TruthTable& t, Mask k, Mask c, Mask r, Mask mu) {
    for (auto [m, name] : {std::pair{k, "k"}, std::pair{c, "c"}, std::pair{r, "r"}, std::pair{mu, "mu"}})
        check_mask(t, m, name);
    const Mask not_mu{t.full_mask() & ~mu.bits};
    require_precedes(k, not_mu, "k must precede not-mu");
    require_precedes(c, not_mu, "c must precede not-mu");
    require_precedes(r, mu, "r must precede mu");
    GaussianInt acc;
    for (std::uint64_t s = not_mu.bits;; s = (s - 1) & not_mu.bits) {
        const std::uint64_t x = r.bits | s;
        const int sign = (t.value(x) != static_cast<bool>(parity(k.bits & x))) ? -1 : 1;
        acc += GaussianInt(sign) * GaussianInt::i_pow(std::popcount(x & c.bits));
        if (s == 0) break;
    }
    return acc;
}

std::int64_t ih_spectrum(const TruthTable& t, Mask u, Mask k, Mask mu) {
    check_mask(t, u, "u");
    check_mask(t, k, "k");
    check_mask(t, mu, "mu");
    require_precedes(k, mu, "k must precede mu");
    return coset_sum(k.bits, t.full_mask() & ~mu.bits, [&](std::uint64_t x) {
        return (t.value(x) != static_cast<bool>(parity(u.bits & x))) ? std::int64_t{-1} : std::int64_t{1};
    });
}

namespace {

enum class Kernel { identity, hadamard, nega_hadamard };

template <typename T>
void apply_kernel(std::vector<T>& v, std::size_t position, Kernel kernel) {
    if (kernel == Kernel::identity) return;
    const std::uint64_t half = std::uint64_t{1} << position;
    for (std::uint64_t x = 0; x < v.size(); ++x) {
        if (x & half) continue;
        T lo = v[x];
        T hi = v[x | half];
        if (kernel == Kernel::hadamard) {
            v[x] = lo + hi;
            v[x | half] = lo - hi;
        } else {
            if constexpr (std::is_same_v<T, GaussianInt>) {
                const GaussianInt ihi = GaussianInt(0, 1) * hi;
                v[x] = lo + ihi;
                v[x | half] = lo - ihi;
            }
        }
    }
}

}  // namespace

std::vector<GaussianInt> ihn_transform(const TruthTable& t, Mask mu, Mask c) {
    check_mask(t, mu, "mu");
    check_mask(t, c, "c");
    require_precedes(c, Mask{t.full_mask() & ~mu.bits}, "c must precede not-mu");
    std::vector<GaussianInt> v(t.length());
    for (std::uint64_t x = 0; x < t.length(); ++x) v[x] = GaussianInt(t.sign(x));
    for (std::size_t p = 0; p < t.n(); ++p) {
        const std::uint64_t bit = std::uint64_t{1} << p;
        apply_kernel(v, p,
                     (mu.bits & bit)  ? Kernel::identity
                     : (c.bits & bit) ? Kernel::nega_hadamard
                                      : Kernel::hadamard);
    }
    return v;
}

std::optional<QuadraticForm> quadratic_form(const TruthTable& t) {
    const std::size_t n = t.n();
    const bool f0 = t.value(0);
    std::uint64_t linear = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (t.value(std::uint64_t{1} << i) != f0) linear |= std::uint64_t{1} << i;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t ei = std::uint64_t{1} << i;
            const std::uint64_t ej = std::uint64_t{1} << j;
            if (t.value(0) ^ t.value(ei) ^ t.value(ej) ^ t.value(ei | ej)) edges.emplace_back(i, j);
        }
    QuadraticForm form{Graph::from_edges(n, edges), linear, f0};
    TruthTable quad = from_graph(form.b);
    for (std::uint64_t x = 0; x < t.length(); ++x) {
        const bool expected = quad.value(x) ^ static_cast<bool>(parity(linear & x)) ^ f0;
        if (expected != t.value(x)) return std::nullopt;
    }
    return form;
}

namespace {

std::size_t error_weight(std::uint64_t a, std::uint64_t b, bool doubly_counted) {
    return doubly_counted ? static_cast<std::size_t>(std::popcount(a) + std::popcount(b))
                          : static_cast<std::size_t>(std::popcount(a | b));
}

// For each shift a (ordered by weight, then value) the sums over all b are
// one Walsh-Hadamard transform of x -> s_x s_{x+a}.
CorrelationDistance generic_correlation_distance(const TruthTable& t, bool doubly_counted) {
    if (t.n() > kMaxGenericCorrelationVars)
        throw LimitError("generic correlation distance supports n <= " +
                         std::to_string(kMaxGenericCorrelationVars) + " for non-quadratic tables, got n=" +
                         std::to_string(t.n()));
    const std::uint64_t len = t.length();
    std::vector<std::uint64_t> shifts(len - 1);
    std::iota(shifts.begin(), shifts.end(), 1);
    std::stable_sort(shifts.begin(), shifts.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });

    CorrelationDistance best;
    best.value = std::numeric_limits<std::size_t>::max();
    best.route = CorrelationRoute::generic;
    std::vector<std::int64_t> sums(len);
    for (std::uint64_t a : shifts) {
        if (static_cast<std::size_t>(std::popcount(a)) >= best.value) break;
        for (std::uint64_t x = 0; x < len; ++x) sums[x] = t.sign(x) * t.sign(x ^ a);
        for (std::uint64_t half = 1; half < len; half <<= 1)
            for (std::uint64_t base = 0; base < len; base += 2 * half)
                for (std::uint64_t x = base; x < base + half; ++x) {
                    std::int64_t lo = sums[x];
                    std::int64_t hi = sums[x + half];
                    sums[x] = lo + hi;
                    sums[x + half] = lo - hi;
                }
        for (std::uint64_t b = 0; b < len; ++b) {
            if (sums[b] == 0) continue;
            const std::size_t w = error_weight(a, b, doubly_counted);
            if (w < best.value) {
                best.value = w;
                best.a = Mask{a};
                best.b = Mask{b};
            }
        }
    }
    return best;
}

// f quadratic with graph B: the sum is +-2^n exactly when b = B a.
CorrelationDistance quadratic_correlation_distance(const QuadraticForm& form, bool doubly_counted) {
    const std::size_t n = form.b.size();
    CorrelationDistance best;
    best.value = std::numeric_limits<std::size_t>::max();
    best.route = CorrelationRoute::quadratic;
    std::uint64_t a = 0;
    std::uint64_t ba = 0;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
        const std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
        a ^= std::uint64_t{1} << bit;
        ba ^= form.b.row(bit).low_word();
        const std::size_t w = error_weight(a, ba, doubly_counted);
        if (w < best.value || (w == best.value && a < best.a.bits)) {
            best.value = w;
            best.a = Mask{a};
            best.b = Mask{ba};
        }
    }
    return best;
}

CorrelationDistance correlation_distance(const TruthTable& t, CorrelationRoute route, bool doubly_counted) {
    if (route == CorrelationRoute::generic) return generic_correlation_distance(t, doubly_counted);
    auto form = quadratic_form(t);
    if (form) return quadratic_correlation_distance(*form, doubly_counted);
    if (route == CorrelationRoute::quadratic)
        throw PreconditionError("quadratic route requested for a table of degree > 2");
    return generic_correlation_distance(t, doubly_counted);
}

}  // namespace

CorrelationDistance apc_distance(const TruthTable& t, CorrelationRoute route) {
    return correlation_distance(t, route, false);
}

CorrelationDistance epc_distance(const TruthTable& t, CorrelationRoute route) {
    return correlation_distance(t, route, true);
}

namespace {

// Depth-first walk over kernel choices per position, one buffer per depth.
// `best_norm` / `best_exp` hold the peak |P|^2 / 2^exp seen so far.
template <typename T>
class PeakSearch {
   public:
    PeakSearch(const TruthTable& t, bool with_nega) : n_(t.n()), with_nega_(with_nega), buffers_(t.n() + 1) {
        buffers_[0].resize(t.length());
        for (std::uint64_t x = 0; x < t.length(); ++x) buffers_[0][x] = T(t.sign(x));
    }

    Rational run() {
        descend(0, 0);
        return Rational::dyadic(best_norm_, best_exp_);
    }

   private:
    static std::int64_t norm2(const T& v) {
        if constexpr (std::is_same_v<T, GaussianInt>) {
            return v.norm2();
        } else {
            return v * v;
        }
    }

    void descend(std::size_t position, int transformed) {
        if (position == n_) {
            for (const T& v : buffers_[n_]) {
                const std::int64_t m = norm2(v);
                // m / 2^transformed > best_norm / 2^best_exp
                if ((static_cast<__int128>(m) << best_exp_) > (static_cast<__int128>(best_norm_) << transformed)) {
                    best_norm_ = m;
                    best_exp_ = transformed;
                }
            }
            return;
        }
        const Kernel kernels[3] = {Kernel::identity, Kernel::hadamard, Kernel::nega_hadamard};
        const std::size_t choices = with_nega_ ? 3 : 2;
        for (std::size_t c = 0; c < choices; ++c) {
            buffers_[position + 1] = buffers_[position];
            apply_kernel(buffers_[position + 1], position, kernels[c]);
            descend(position + 1, transformed + (kernels[c] == Kernel::identity ? 0 : 1));
        }
    }

    std::size_t n_;
    bool with_nega_;
    std::vector<std::vector<T>> buffers_;
    std::int64_t best_norm_ = 0;
    int best_exp_ = 0;
};

}  // namespace

Rational par_ihn(const TruthTable& t) {
    if (t.n() > kMaxParIhnVars)
        throw LimitError("PAR over {I,H,N}^n supports n <= " + std::to_string(kMaxParIhnVars) + ", got n=" +
                         std::to_string(t.n()));
    return PeakSearch<GaussianInt>(t, true).run();
}

Rational par_ih(const TruthTable& t) {
    if (t.n() > kMaxParIhVars)
        throw LimitError("PAR over {I,H}^n supports n <= " + std::to_string(kMaxParIhVars) + ", got n=" +
                         std::to_string(t.n()));
    return PeakSearch<std::int64_t>(t, false).run();
}

}  // namespace qnl
