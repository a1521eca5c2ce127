#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qnl/boolean.hpp"
#include "qnl/errors.hpp"
#include "qnl/random.hpp"
#include "qnl/verify.hpp"

using namespace qnl;

namespace {

Graph cyclic_t3() {
    return Graph::from_rows({BitVec::from_string("011100010"), BitVec::from_string("101010001"),
                             BitVec::from_string("110001100"), BitVec::from_string("100011100"),
                             BitVec::from_string("010101010"), BitVec::from_string("001110001"),
                             BitVec::from_string("001100011"), BitVec::from_string("100010101"),
                             BitVec::from_string("010001110")});
}

TruthTable zero(std::size_t n) { return TruthTable(n); }

std::uint64_t random_submask(Rng& rng, std::uint64_t of) { return rng.next() & of; }

}  // namespace

TEST(truth_table, from_graph_examples) {
    EXPECT_EQ(from_graph(clique(2)).to_signs(), "+++-");
    EXPECT_EQ(from_graph(Graph(4)).to_signs(), std::string(16, '+'));
    const auto t = from_graph(cyclic_t3());
    EXPECT_EQ(t.length(), 512u);
    const auto b = oracle::matrix(cyclic_t3());
    for (std::uint64_t x = 0; x < 512; ++x) ASSERT_EQ(t.value(x), oracle::graph_function(b, x) == 1);
    // 18 edges, so f(1...1) = 0
    EXPECT_EQ(t.sign(511), 1);
}

TEST(truth_table, rejects_bad_input) {
    EXPECT_THROW(TruthTable::from_signs(2, "+++"), FormatError);
    EXPECT_THROW(TruthTable::from_signs(1, "+x"), FormatError);
    EXPECT_THROW(TruthTable(0), LimitError);
    EXPECT_THROW(TruthTable(2, BitVec(3)), DimensionError);
}

TEST(wht, examples) {
    EXPECT_EQ(wht(zero(1)), (std::vector<std::int64_t>{2, 0}));
    EXPECT_EQ(wht(from_graph(clique(2))), (std::vector<std::int64_t>{2, 2, 2, -2}));
}

TEST(wht, matches_direct_sums_and_parseval) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 10;
        const auto t = verify::random_table(n, seed);
        const auto f = oracle::values(t);
        const auto w = wht(t);
        std::int64_t energy = 0;
        for (auto v : w) energy += v * v;
        ASSERT_EQ(energy, std::int64_t{1} << (2 * n));
        if (n <= 7)
            for (std::uint64_t b = 0; b < t.length(); ++b) {
                long long direct = 0;
                for (std::uint64_t x = 0; x < t.length(); ++x) direct += oracle::sgn(f[x] + oracle::parity(b & x));
                ASSERT_EQ(w[b], direct);
            }
    }
}

TEST(autocorrelation, periodic_examples) {
    const auto k2 = from_graph(clique(2));
    EXPECT_EQ(periodic_autocorrelation(k2, Mask{0}), 4);
    EXPECT_EQ(periodic_autocorrelation(k2, Mask{0b11}), 0);
    EXPECT_EQ(periodic_autocorrelation(k2, Mask{0b01}), 0);
}

TEST(autocorrelation, aperiodic_examples) {
    const auto k2 = from_graph(clique(2));
    EXPECT_EQ(aperiodic_autocorrelation(k2, Mask{0}, Mask{0}), 4);
    // a = 10 (variable 1 set, index bit 0), k = 00
    EXPECT_EQ(aperiodic_autocorrelation(k2, Mask{0b01}, Mask{0}), 0);
    // a all ones: single term
    const auto t = verify::random_table(4, 3);
    for (std::uint64_t k = 0; k < 16; ++k) {
        const int expected = t.sign(k) * t.sign(k ^ 15);
        EXPECT_EQ(aperiodic_autocorrelation(t, Mask{15}, Mask{k}), expected);
    }
    EXPECT_THROW(aperiodic_autocorrelation(k2, Mask{0b01}, Mask{0b10}), PreconditionError);
}

TEST(autocorrelation, fixed_families_match_naive_loops) {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(8);
        const auto t = verify::random_table(n, rng.next());
        const auto f = oracle::values(t);
        const std::uint64_t full = t.full_mask();
        const std::uint64_t mu = random_submask(rng, full);
        const std::uint64_t k = random_submask(rng, mu);
        const std::uint64_t a_in = random_submask(rng, mu);
        const std::uint64_t a_any = random_submask(rng, full);
        auto naive = [&](std::uint64_t a) {
            long long s = 0;
            for (std::uint64_t x = 0; x <= full; ++x)
                if ((x & mu) == k) s += oracle::sgn(f[x] + f[x ^ a]);
            return s;
        };
        ASSERT_EQ(fixed_aperiodic_autocorrelation(t, Mask{a_in}, Mask{mu}, Mask{k}), naive(a_in));
        ASSERT_EQ(fixed_extended_autocorrelation(t, Mask{a_any}, Mask{mu}, Mask{k}), naive(a_any));
        ASSERT_EQ(fixed_extended_autocorrelation(t, Mask{a_in}, Mask{mu}, Mask{k}),
                  fixed_aperiodic_autocorrelation(t, Mask{a_in}, Mask{mu}, Mask{k}));
        // mu = a reduces to the aperiodic form
        ASSERT_EQ(fixed_aperiodic_autocorrelation(t, Mask{mu}, Mask{mu}, Mask{k}),
                  aperiodic_autocorrelation(t, Mask{mu}, Mask{k}));
        // mu = 0 gives r(a)
        ASSERT_EQ(fixed_extended_autocorrelation(t, Mask{a_any}, Mask{0}, Mask{0}),
                  periodic_autocorrelation(t, Mask{a_any}));
    }
}

TEST(autocorrelation, precondition_errors) {
    const auto t = zero(3);
    EXPECT_THROW(fixed_aperiodic_autocorrelation(t, Mask{0b100}, Mask{0b011}, Mask{0}), PreconditionError);
    EXPECT_THROW(fixed_extended_autocorrelation(t, Mask{0}, Mask{0b001}, Mask{0b010}), PreconditionError);
    EXPECT_THROW(periodic_autocorrelation(t, Mask{0b1000}), PreconditionError);
}

TEST(spectra, ihn_examples) {
    EXPECT_EQ(ihn_spectrum(zero(3), Mask{0}, Mask{0}, Mask{0}, Mask{0}), GaussianInt(8, 0));
    EXPECT_EQ(ihn_spectrum(zero(1), Mask{0}, Mask{1}, Mask{0}, Mask{0}), GaussianInt(1, 1));
    EXPECT_THROW(ihn_spectrum(zero(2), Mask{0b01}, Mask{0}, Mask{0}, Mask{0b01}), PreconditionError);
    EXPECT_THROW(ihn_spectrum(zero(2), Mask{0}, Mask{0}, Mask{0b10}, Mask{0b01}), PreconditionError);
}

TEST(spectra, ihn_matches_naive_sum) {
    Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto t = verify::random_table(n, rng.next());
        const auto f = oracle::values(t);
        const std::uint64_t full = t.full_mask();
        const std::uint64_t mu = random_submask(rng, full);
        const std::uint64_t k = random_submask(rng, full & ~mu);
        const std::uint64_t c = random_submask(rng, full & ~mu);
        const std::uint64_t r = random_submask(rng, mu);
        const auto expected = oracle::ihn_entry(f, n, k, c, r, mu);
        const auto got = ihn_spectrum(t, Mask{k}, Mask{c}, Mask{r}, Mask{mu});
        ASSERT_EQ(got.re, expected.real());
        ASSERT_EQ(got.im, expected.imag());
    }
}

TEST(spectra, ihn_transform_matches_entries) {
    Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto t = verify::random_table(n, rng.next());
        const std::uint64_t full = t.full_mask();
        const std::uint64_t mu = random_submask(rng, full);
        const std::uint64_t c = random_submask(rng, full & ~mu);
        const auto v = ihn_transform(t, Mask{mu}, Mask{c});
        ASSERT_EQ(v.size(), t.length());
        for (std::uint64_t y = 0; y <= full; ++y)
            ASSERT_EQ(v[y], ihn_spectrum(t, Mask{y & ~mu}, Mask{c}, Mask{y & mu}, Mask{mu}));
    }
}

TEST(spectra, ih_examples_and_naive) {
    const auto t = verify::random_table(5, 99);
    const auto w = wht(t);
    for (std::uint64_t u = 0; u < 32; ++u) EXPECT_EQ(ih_spectrum(t, Mask{u}, Mask{0}, Mask{0}), w[u]);
    for (std::uint64_t k = 0; k < 32; ++k) EXPECT_EQ(std::abs(ih_spectrum(t, Mask{0}, Mask{k}, Mask{31})), 1);
    Rng rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.below(8);
        const auto table = verify::random_table(n, rng.next());
        const auto f = oracle::values(table);
        const std::uint64_t full = table.full_mask();
        const std::uint64_t mu = random_submask(rng, full);
        const std::uint64_t k = random_submask(rng, mu);
        const std::uint64_t u = random_submask(rng, full);
        long long s = 0;
        for (std::uint64_t x = 0; x <= full; ++x)
            if ((x & mu) == k) s += oracle::sgn(f[x] + oracle::parity(u & x));
        ASSERT_EQ(ih_spectrum(table, Mask{u}, Mask{k}, Mask{mu}), s);
    }
}

TEST(quadratic_form, recovers_and_rejects) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 1 + seed % 9;
        const auto t = verify::random_quadratic(n, seed);
        auto q = quadratic_form(t);
        ASSERT_TRUE(q);
        const auto f = oracle::values(t);
        const auto b = oracle::matrix(q->b);
        for (std::uint64_t x = 0; x < t.length(); ++x)
            ASSERT_EQ(f[x], (oracle::graph_function(b, x) + oracle::parity(q->linear & x) + q->constant) & 1);
    }
    // x1 x2 x3 has degree three
    EXPECT_FALSE(quadratic_form(TruthTable::from_signs(3, "+++++++-")));
}

TEST(correlation_distance, examples) {
    for (std::size_t n = 4; n <= 10; ++n) {
        const auto t = from_graph(clique(n));
        EXPECT_EQ(apc_distance(t).value, 2u) << n;
        EXPECT_EQ(epc_distance(t).value, 4u) << n;
    }
    EXPECT_EQ(epc_distance(from_graph(clique(3)), CorrelationRoute::generic).value, 3u);
    EXPECT_EQ(apc_distance(zero(3), CorrelationRoute::generic).value, 1u);
    EXPECT_EQ(epc_distance(from_graph(cyclic_t3())).value, 4u);
}

TEST(correlation_distance, routes_agree_with_naive_scan) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 1 + seed % 6;
        const auto quad = verify::random_quadratic(n, seed);
        const auto any = verify::random_table(n, seed + 1000);
        for (bool twice : {false, true}) {
            auto run = [&](const TruthTable& t, CorrelationRoute r) {
                return twice ? epc_distance(t, r).value : apc_distance(t, r).value;
            };
            ASSERT_EQ(run(quad, CorrelationRoute::generic), oracle::correlation_distance(quad, twice));
            ASSERT_EQ(run(quad, CorrelationRoute::quadratic), oracle::correlation_distance(quad, twice));
            ASSERT_EQ(run(any, CorrelationRoute::automatic), oracle::correlation_distance(any, twice));
        }
        ASSERT_LE(apc_distance(any).value, epc_distance(any).value);
    }
}

TEST(correlation_distance, witness_has_nonzero_sum) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto t = verify::random_table(1 + seed % 7, seed);
        const auto f = oracle::values(t);
        const auto d = epc_distance(t);
        EXPECT_NE(oracle::correlation(f, d.a.bits, d.b.bits), 0);
        EXPECT_EQ(std::popcount(d.a.bits) + std::popcount(d.b.bits), static_cast<int>(d.value));
    }
}

TEST(correlation_distance, limits) {
    EXPECT_THROW(epc_distance(verify::random_table(15, 1)), LimitError);
    EXPECT_THROW(epc_distance(verify::random_table(4, 1), CorrelationRoute::quadratic), PreconditionError);
    // quadratic tables beyond the generic limit use the closed form
    EXPECT_EQ(epc_distance(from_graph(clique(16))).value, 4u);
}

TEST(par, examples) {
    EXPECT_EQ(par_ihn(zero(1)), Rational(2));
    EXPECT_EQ(par_ih(zero(1)), Rational(2));
    for (std::size_t t = 1; t <= 8; ++t) EXPECT_EQ(par_ih(from_graph(clique(t))), Rational(2)) << t;
    NestedCliqueSpec spec;
    spec.t = 3;
    spec.blocks = 2;
    spec.rule = SigmaRule::identity;
    EXPECT_EQ(par_ih(from_graph(nested_clique(spec))), Rational(4));
}

TEST(par, matches_naive_maximization) {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const std::size_t n = 1 + seed % 5;
        const auto t = (seed & 1) ? verify::random_quadratic(n, seed) : verify::random_table(n, seed);
        for (bool nega : {false, true}) {
            auto [num, log_den] = oracle::par(t, nega);
            const Rational expected = Rational::dyadic(num, log_den);
            ASSERT_EQ(nega ? par_ihn(t) : par_ih(t), expected) << "seed " << seed;
            ASSERT_GE(expected, Rational(1));
        }
    }
}

TEST(par, limits) {
    EXPECT_THROW(par_ihn(zero(kMaxParIhnVars + 1)), LimitError);
    EXPECT_THROW(par_ih(zero(kMaxParIhVars + 1)), LimitError);
}
