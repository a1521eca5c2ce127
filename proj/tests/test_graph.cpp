#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qnl/errors.hpp"
#include "qnl/graph.hpp"
#include "qnl/random.hpp"

using namespace qnl;

namespace {

void expect_valid(const Graph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        ASSERT_FALSE(g.adjacent(i, i));
        for (std::size_t j = 0; j < g.size(); ++j) ASSERT_EQ(g.adjacent(i, j), g.adjacent(j, i));
    }
}

std::vector<bool> row(const std::string& bits) {
    std::vector<bool> r;
    for (char c : bits) r.push_back(c == '1');
    return r;
}

}  // namespace

TEST(graph, from_rows_validates) {
    EXPECT_THROW(Graph::from_rows({BitVec::from_string("01"), BitVec::from_string("00")}), PreconditionError);
    EXPECT_THROW(Graph::from_rows({BitVec::from_string("10"), BitVec::from_string("00")}), PreconditionError);
    EXPECT_THROW(Graph::from_rows({BitVec::from_string("0"), BitVec::from_string("00")}), DimensionError);
    EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), PreconditionError);
}

TEST(clique, sizes) {
    EXPECT_EQ(clique(1).edge_count(), 0u);
    EXPECT_EQ(clique(3).edge_count(), 3u);
    for (std::size_t t = 1; t <= 50; ++t) {
        const Graph g = clique(t);
        ASSERT_EQ(g.edge_count(), t * (t - 1) / 2);
        ASSERT_EQ(g.regular_degree(), static_cast<long>(t - 1));
    }
}

TEST(nested_clique, cyclic_t3_matrix) {
    NestedCliqueSpec spec;
    spec.t = 3;
    spec.rule = SigmaRule::cyclic;
    const std::vector<std::string> printed = {"011100010", "101010001", "110001100", "100011100", "010101010",
                                              "001110001", "001100011", "100010101", "010001110"};
    const Graph g = nested_clique(spec);
    for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(g.row(i).to_string(), printed[i]) << "row " << i + 1;
}

TEST(nested_clique, k2_k3_edges) {
    NestedCliqueSpec spec;
    spec.t = 3;
    spec.blocks = 2;
    spec.rule = SigmaRule::identity;
    const Graph g = nested_clique(spec);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (auto [u, v] : g.edges()) edges.emplace(u + 1, v + 1);
    const std::set<std::pair<std::size_t, std::size_t>> expected = {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6},
                                                                    {5, 6}, {1, 4}, {2, 5}, {3, 6}};
    EXPECT_EQ(edges, expected);
}

TEST(nested_clique, regular_for_small_primes) {
    for (std::size_t t : {3, 5, 7, 11}) {
        NestedCliqueSpec spec;
        spec.t = t;
        const Graph g = nested_clique(spec);
        expect_valid(g);
        EXPECT_EQ(g.size(), t * t);
        EXPECT_EQ(g.regular_degree(), static_cast<long>(2 * t - 2));
    }
}

TEST(nested_clique, canonical_pairs_and_affine_rule) {
    auto pairs = canonical_sigma_pairs(5);
    const std::vector<std::pair<std::size_t, std::size_t>> expected = {{1, 5}, {1, 4}, {2, 5}, {1, 3},
                                                                       {2, 4}, {3, 5}};
    EXPECT_EQ(pairs, expected);

    NestedCliqueSpec spec;
    spec.t = 5;
    auto sigmas = resolve_sigmas(spec);
    ASSERT_EQ(sigmas.size(), 6u);
    // sigma_1 is the identity, sigma_2 shifts by one
    EXPECT_EQ(sigmas[0], (std::vector<std::size_t>{1, 2, 3, 4, 5}));
    EXPECT_EQ(sigmas[1], (std::vector<std::size_t>{2, 3, 4, 5, 1}));
    // k = 6: l = 1, m = 1, step 2
    EXPECT_EQ(sigmas[5], (std::vector<std::size_t>{1, 3, 5, 2, 4}));
    for (const auto& s : sigmas) {
        std::vector<std::size_t> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(sorted, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
    }
}

TEST(nested_clique, spec_errors) {
    NestedCliqueSpec spec;
    spec.t = 9;
    EXPECT_THROW(nested_clique(spec), PreconditionError);
    spec.t = 3;
    spec.rule = SigmaRule::explicit_list;
    spec.sigmas = {{1, 1, 2}};
    EXPECT_THROW(nested_clique(spec), PreconditionError);
    spec.sigmas = {{2, 3, 1}, {1, 2, 3}};
    EXPECT_THROW(nested_clique(spec), PreconditionError);
    spec.sigmas = {{2, 3, 1}};
    EXPECT_NO_THROW(nested_clique(spec));
}

TEST(circulant, examples) {
    const Graph c4 = circulant(row("0101"));
    EXPECT_EQ(c4.edge_count(), 4u);
    EXPECT_EQ(c4.regular_degree(), 2);
    const Graph c5 = circulant(row("01001"));
    EXPECT_EQ(c5.edge_count(), 5u);
    EXPECT_TRUE(c5.adjacent(0, 1) && c5.adjacent(0, 4) && !c5.adjacent(0, 2));
    EXPECT_THROW(circulant(row("0100")), PreconditionError);
    EXPECT_THROW(circulant(row("1101")), PreconditionError);
    Rng rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.below(20);
        std::vector<bool> r(n, false);
        for (std::size_t i = 1; i <= n / 2; ++i) r[i] = r[n - i] = rng.coin();
        const Graph g = circulant(r);
        expect_valid(g);
        const long w = std::count(r.begin(), r.end(), true);
        EXPECT_EQ(g.regular_degree() == -1 ? 0 : g.regular_degree(), w);
    }
}

TEST(two_circulant, examples) {
    const Graph pair = two_circulant(row("01001"), row("00000"));
    EXPECT_EQ(pair.edge_count(), 10u);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 5; j < 10; ++j) EXPECT_FALSE(pair.adjacent(i, j));
    const Graph matching = two_circulant(row("0000"), row("1000"));
    EXPECT_EQ(matching.edge_count(), 4u);
    EXPECT_EQ(matching.regular_degree(), 1);
    const Graph mixed = two_circulant(row("0110011"), row("1101000"));
    expect_valid(mixed);
    EXPECT_EQ(mixed.regular_degree(), 4 + 3);
    EXPECT_THROW(two_circulant(row("000"), row("10")), DimensionError);
}

TEST(random_regular, examples_and_determinism) {
    EXPECT_EQ(random_regular(4, 3, 1), clique(4));
    const Graph cycles = random_regular(6, 2, 5);
    EXPECT_EQ(cycles.regular_degree(), 2);
    EXPECT_EQ(random_regular(56, 15, 7), random_regular(56, 15, 7));
    EXPECT_NE(random_regular(56, 15, 7), random_regular(56, 15, 8));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_regular(25, 8, seed);
        expect_valid(g);
        EXPECT_EQ(g.regular_degree(), 8);
    }
    EXPECT_THROW(random_regular(5, 3, 0), PreconditionError);
    EXPECT_THROW(random_regular(4, 4, 0), PreconditionError);
}

TEST(random_graph, deterministic) {
    EXPECT_EQ(random_graph(12, 3), random_graph(12, 3));
    expect_valid(random_graph(12, 3));
}

TEST(independence_number, examples) {
    for (std::size_t t = 1; t <= 12; ++t) EXPECT_EQ(independence_number(clique(t)).alpha, 1u);
    NestedCliqueSpec k2k3;
    k2k3.t = 3;
    k2k3.blocks = 2;
    k2k3.rule = SigmaRule::identity;
    EXPECT_EQ(independence_number(nested_clique(k2k3)).alpha, 2u);
    for (std::size_t t : {3, 5, 7}) {
        NestedCliqueSpec spec;
        spec.t = t;
        const Graph g = nested_clique(spec);
        const auto mis = independence_number(g);
        EXPECT_EQ(mis.alpha, t);
        EXPECT_EQ(mis.witness.size(), t);
        EXPECT_TRUE(is_independent(g, mis.witness));
    }
    EXPECT_EQ(independence_number(Graph(5)).alpha, 5u);
}

TEST(independence_number, matches_subset_scan) {
    Rng rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng.below(18);
        Graph g = (trial % 3 == 0 && n >= 4 && n % 2 == 0) ? random_regular(n, 3, rng.next())
                                                             : random_graph(n, rng.next());
        const auto mis = independence_number(g);
        ASSERT_EQ(mis.alpha, oracle::independence_number(g)) << "n=" << n;
        ASSERT_EQ(mis.witness.size(), mis.alpha);
        ASSERT_TRUE(is_independent(g, mis.witness));
        ASSERT_TRUE(std::is_sorted(mis.witness.begin(), mis.witness.end()));
    }
}

TEST(independence_number, budget_and_limits) {
    MisBudget tiny;
    tiny.max_nodes = 1;
    try {
        independence_number(random_regular(80, 6, 1), tiny);
        FAIL() << "expected BudgetError";
    } catch (const BudgetError& e) {
        EXPECT_GT(e.best_bound(), 0);
    }
    EXPECT_THROW(independence_number(Graph(kMaxMisVertices + 1)), LimitError);
}

TEST(independence_number, random_regular_concentration) {
    // smoke property: 500 samples at n=56, degree 15 stay within a narrow band
    std::size_t lo = 1000, hi = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto a = independence_number(random_regular(56, 15, seed)).alpha;
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    EXPECT_LE(hi - lo, 6u);
}
