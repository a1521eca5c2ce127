#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnl/boolean.hpp"
#include "qnl/graph.hpp"

namespace qnl::verify {

struct CheckFailure {
    std::string input;  ///< digest of the offending instance
    std::string lhs;
    std::string rhs;
};

/// Outcome of comparing two independently computed sides of an identity
/// over a batch of instances. Passed iff `failures` is empty.
struct CheckReport {
    std::string name;
    std::uint64_t instances = 0;
    std::vector<CheckFailure> failures;
    std::chrono::milliseconds elapsed{0};
    std::optional<std::uint64_t> seed;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    /// Appends another report's instances, failures, time and notes.
    void merge(const CheckReport& other);
};

/// Short printable identity of an instance.
std::string digest(const Graph& g);
std::string digest(const TruthTable& t);

/// 2^n r(a) == sum_b W(b)^2 (-1)^{b.a} for every a. n <= 10.
CheckReport check_wk(const TruthTable& t);

/// Modified autocorrelation with nega-Hadamard phases against the
/// {I,H,N}^n power spectrum, on `draws` seeded draws of (mu, k, a, c) with
/// k <= mu and a, c <= not-mu. Both sides are scaled to Gaussian integers. n <= 6.
CheckReport check_eq322(const TruthTable& t, std::uint64_t seed, std::size_t draws = 20);

/// v(a, mu, k) 2^{n - wt(mu)} == sum_{u <= not-mu} P_{u,k,mu}^2 (-1)^{u.a} for
/// all a <= not-mu, on `draws` seeded (mu, k). n <= 8.
CheckReport check_eq44(const TruthTable& t, std::uint64_t seed, std::size_t draws = 20);

/// Generic APC distance of the graph's function == Hamming distance of (B | I). n <= 12.
CheckReport check_apc_equals_d(const Graph& g);

/// Generic EPC distance == binary distance of (B | I). n <= 12 compares the
/// explicit correlation sums against codeword enumeration; larger graphs
/// compare the quadratic closed form against the bounded code search.
CheckReport check_epc_equals_db(const Graph& g);

/// Every |P_{u,k,mu}|^2 <= 2^{n-w} (sum_{i >= d-w} C(n-w, i) + 1), w = wt(mu),
/// d = EPC distance. n <= 8.
CheckReport check_par_bound(const TruthTable& t);

/// PAR over {I,H}^n == 2^alpha(G). n <= 14. This equality does not hold for
/// every graph; a failing instance gets a note with max_S |S| - rank(B_S).
CheckReport check_par_alpha(const Graph& g);

/// PAR over {I,H}^n == 2^{max_S |S| - rank(B_S)} over vertex subsets S, and
/// PAR >= 2^alpha(G). n <= 14.
CheckReport check_par_rank(const Graph& g);

/// max over vertex subsets S of |S| - rank over F2 of the induced adjacency matrix.
std::size_t max_nullity(const Graph& g);

/// Each generator X_i prod_j Z_j^{B_ij} fixes the sign vector (-1)^{f}. n <= 12.
CheckReport check_graph_state(const Graph& g);

/// lattice_min_norm == min(2, d_b / 2); notes carry gap = d_b / 4. n <= 6.
CheckReport check_lattice_gap(const Graph& g);

struct SuiteOptions {
    std::size_t n = 6;
    std::size_t samples = 20;
    std::uint64_t seed = 0;
};

/// wk, eq322, eq44, apc-d, epc-db, par-bound, par-alpha, par-rank, graph-state, lattice-gap.
const std::vector<std::string>& suite_names();

/// Largest n a suite accepts.
std::size_t suite_max_n(std::string_view name);

/// Runs `samples` seeded instances of size n through the named check; "all"
/// runs every suite with n clamped to each suite's maximum. Throws
/// PreconditionError for unknown names and LimitError when n is too large.
CheckReport run_suite(std::string_view name, const SuiteOptions& options);

/// Uniformly random function on n variables.
TruthTable random_table(std::size_t n, std::uint64_t seed);
/// Random quadratic function: random graph plus random linear and constant terms.
TruthTable random_quadratic(std::size_t n, std::uint64_t seed);

}  // namespace qnl::verify
