#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnl/bitvec.hpp"
#include "qnl/graph.hpp"
#include "qnl/rational.hpp"

namespace qnl {

/// Exact Gaussian integer re + i*im.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}  // NOLINT(implicit)

    constexpr std::int64_t norm2() const { return re * re + im * im; }

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInt& operator+=(GaussianInt b) { return *this = *this + b; }
    friend constexpr bool operator==(GaussianInt, GaussianInt) = default;

    /// i^e for any integer exponent.
    static constexpr GaussianInt i_pow(long e) {
        switch (((e % 4) + 4) % 4) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
};

std::string to_string(GaussianInt z);

/// Subset of {1..n} as an n-bit word; variable x_i is bit i-1.
struct Mask {
    std::uint64_t bits = 0;

    constexpr Mask() = default;
    constexpr explicit Mask(std::uint64_t b) : bits(b) {}
    friend constexpr bool operator==(Mask, Mask) = default;
};

/// x precedes y: x_i <= y_i for all i.
constexpr bool precedes(Mask x, Mask y) { return (x.bits & ~y.bits) == 0; }

constexpr std::size_t kMaxTruthTableVars = 30;

/// Sign table s_x = (-1)^{f(x)} of a boolean function f on n variables,
/// bit-packed (set bit = -1). Index x = sum_i x_i 2^{i-1}.
class TruthTable {
   public:
    /// The constant-zero function.
    explicit TruthTable(std::size_t n);
    TruthTable(std::size_t n, BitVec values);

    /// "+-" string of length 2^n in index order.
    static TruthTable from_signs(std::size_t n, const std::string& signs);

    std::size_t n() const { return n_; }
    std::uint64_t length() const { return std::uint64_t{1} << n_; }
    std::uint64_t full_mask() const { return length() - 1; }
    bool value(std::uint64_t x) const { return values_.get(x); }
    int sign(std::uint64_t x) const { return values_.get(x) ? -1 : 1; }
    const BitVec& values() const { return values_; }
    std::string to_signs() const;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

   private:
    std::size_t n_;
    BitVec values_;
};

/// f(x) = sum_{i<j} B_ij x_i x_j.
TruthTable from_graph(const Graph& b);

/// Unnormalized Walsh-Hadamard spectrum W(b) = sum_x (-1)^{f(x) + b.x},
/// computed by an in-place butterfly.
std::vector<std::int64_t> wht(const TruthTable& t);

/// r(a) = sum_x (-1)^{f(x) + f(x+a)}.
std::int64_t periodic_autocorrelation(const TruthTable& t, Mask a);

/// s(a, k) = sum over x in k + V_{not a}; requires k precedes a.
std::int64_t aperiodic_autocorrelation(const TruthTable& t, Mask a, Mask k);

/// s(a, mu, k) = sum over x in k + V_{not mu}; requires a, k precede mu.
std::int64_t fixed_aperiodic_autocorrelation(const TruthTable& t, Mask a, Mask mu, Mask k);

/// v(a, mu, k), same sum as above with a unrestricted; requires k precedes mu.
std::int64_t fixed_extended_autocorrelation(const TruthTable& t, Mask a, Mask mu, Mask k);

/// Unnormalized {I,H,N}^n spectrum entry
/// P = sum_{x in r + V_{not mu}} (-1)^{f(x) + k.x} i^{wt(x & c)}.
/// mu marks the identity positions, c the nega-Hadamard positions.
/// Requires k, c to precede not-mu and r to precede mu.
GaussianInt ihn_spectrum(const TruthTable& t, Mask k, Mask c, Mask r, Mask mu);

/// P_{u,k,mu} = sum_{x in k + V_{not mu}} (-1)^{f(x) + u.x}; requires k precedes mu.
std::int64_t ih_spectrum(const TruthTable& t, Mask u, Mask k, Mask mu);

/// Full output of the {I,H,N}^n transform with identity on mu and
/// nega-Hadamard on c (c precedes not-mu), unnormalized. Entry y equals
/// ihn_spectrum(t, y & ~mu, c, y & mu, mu).
std::vector<GaussianInt> ihn_transform(const TruthTable& t, Mask mu, Mask c);

/// f = sum_{i<j} B_ij x_i x_j + linear . x + constant.
struct QuadraticForm {
    Graph b;
    std::uint64_t linear = 0;
    bool constant = false;
};

/// Recovers the quadratic form of t, or nullopt when f has degree > 2.
std::optional<QuadraticForm> quadratic_form(const TruthTable& t);

enum class CorrelationRoute {
    automatic,  ///< quadratic closed form when available, generic otherwise
    generic,    ///< explicit correlation sums, n <= kMaxGenericCorrelationVars
    quadratic,  ///< closed form; the table must be quadratic
};

constexpr std::size_t kMaxGenericCorrelationVars = 14;

/// Minimum-weight error (a, b) != 0 with sum_x (-1)^{f(x)+f(x+a)+b.x} != 0.
struct CorrelationDistance {
    std::size_t value = 0;
    Mask a;
    Mask b;
    CorrelationRoute route = CorrelationRoute::generic;
};

/// Weight |a OR b| (overlaps counted once).
CorrelationDistance apc_distance(const TruthTable& t, CorrelationRoute route = CorrelationRoute::automatic);
/// Weight wt(a) + wt(b) (overlaps counted twice).
CorrelationDistance epc_distance(const TruthTable& t, CorrelationRoute route = CorrelationRoute::automatic);

constexpr std::size_t kMaxParIhnVars = 10;
constexpr std::size_t kMaxParIhVars = 14;

/// Peak of |(U s)_y|^2 over all U in {I,H,N}^n and outputs y, with unitary
/// normalization, as an exact dyadic rational.
Rational par_ihn(const TruthTable& t);
/// Same peak over {I,H}^n.
Rational par_ih(const TruthTable& t);

}  // namespace qnl
