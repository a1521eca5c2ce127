#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qnl/bitvec.hpp"

namespace qnl {

/// Simple undirected graph on vertices 0..n-1, stored as packed adjacency
/// rows. Symmetric with zero diagonal; doubles as the B matrix of a B-form
/// code. Immutable once built.
class Graph {
   public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Validates symmetry, zero diagonal and row lengths.
    static Graph from_rows(std::vector<BitVec> rows);
    /// 0-indexed edge list; self loops are rejected, duplicates are merged.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const { return rows_.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    const std::vector<BitVec>& rows() const { return rows_; }

    std::size_t degree(std::size_t v) const { return rows_[v].popcount(); }
    std::size_t edge_count() const;
    /// Edges (i, j) with i < j in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// Common degree, or -1 when the graph is not regular (or empty).
    long regular_degree() const;

    friend bool operator==(const Graph&, const Graph&) = default;

   private:
    std::vector<BitVec> rows_;
};

/// Complete graph K_t.
Graph clique(std::size_t t);

/// How the cross-block permutations of a nested clique graph are chosen.
enum class SigmaRule {
    explicit_list,  ///< taken verbatim from NestedCliqueSpec::sigmas
    paper_affine,   ///< sigma_k(i) = m + (i-1)(l+1) mod t with k = l*t + m
    cyclic,         ///< every sigma_k is i -> i+1 mod t
    identity,       ///< every sigma_k is the identity
};

/// Parameters of a nested clique graph [K_b[K_t]]: `blocks` copies of K_t,
/// neighbouring blocks joined by the identity matching and block pairs
/// (i, j), j >= i+2, joined by permutations sigma_k in canonical pair order
/// (j-i descending, then i ascending; sigma_1 sits at block pair (1, blocks)).
struct NestedCliqueSpec {
    std::size_t t = 3;
    std::size_t blocks = 0;  ///< 0 means t blocks
    SigmaRule rule = SigmaRule::paper_affine;
    /// 1-based images, sigmas[k-1][i-1] = sigma_k(i); used with explicit_list.
    std::vector<std::vector<std::size_t>> sigmas;

    std::size_t block_count() const { return blocks == 0 ? t : blocks; }
};

/// Block pairs (i, j), 1-based, j >= i+2, in canonical labelling order.
std::vector<std::pair<std::size_t, std::size_t>> canonical_sigma_pairs(std::size_t blocks);

/// The permutations a NestedCliqueSpec resolves to, in canonical pair order (1-based images).
std::vector<std::vector<std::size_t>> resolve_sigmas(const NestedCliqueSpec& spec);

Graph nested_clique(const NestedCliqueSpec& spec);

/// Circulant graph: entry (i, j) is first_row[(j - i) mod n]. first_row[0]
/// must be 0 and first_row[i] == first_row[n - i].
Graph circulant(const std::vector<bool>& first_row);

/// [[A, B], [B^T, A]] with A = circulant(a_row) and B the circulant matrix of b_row.
Graph two_circulant(const std::vector<bool>& a_row, const std::vector<bool>& b_row);

/// Simple `degree`-regular graph drawn by random pairing of vertex stubs,
/// never pairing a loop or a repeated edge and restarting when stuck.
/// Deterministic in `seed`.
Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed, std::size_t max_attempts = 10000);

/// Each of the n(n-1)/2 possible edges is present independently with
/// probability 1/2.
Graph random_graph(std::size_t n, std::uint64_t seed);

struct IndependentSet {
    std::size_t alpha = 0;
    std::vector<std::size_t> witness;  ///< sorted, 0-based
    std::uint64_t nodes = 0;           ///< search tree nodes visited
};

struct MisBudget {
    std::uint64_t max_nodes = 2'000'000'000ULL;
};

constexpr std::size_t kMaxMisVertices = 192;

/// Exact maximum independent set by branch and bound with a greedy clique
/// cover bound. Throws BudgetError (carrying the best size found) when the
/// node budget runs out, LimitError above kMaxMisVertices.
IndependentSet independence_number(const Graph& g, const MisBudget& budget = {});

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices);

}  // namespace qnl
