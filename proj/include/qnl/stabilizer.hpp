#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnl/bitvec.hpp"
#include "qnl/graph.hpp"
#include "qnl/rational.hpp"

namespace qnl {

/// Binary symplectic form (alpha | beta) of an n-qubit Pauli operator.
/// Qubit i (1-based) is bit i-1 of both words. alpha carries the X part,
/// beta the Z part; (1, 1) is Y.
struct PauliVector {
    BitVec alpha;
    BitVec beta;

    PauliVector() = default;
    explicit PauliVector(std::size_t n) : alpha(n), beta(n) {}
    PauliVector(BitVec a, BitVec b);

    std::size_t size() const { return alpha.size(); }
    bool is_zero() const { return alpha.none() && beta.none(); }

    PauliVector& operator^=(const PauliVector& o) {
        alpha ^= o.alpha;
        beta ^= o.beta;
        return *this;
    }
    friend PauliVector operator^(PauliVector a, const PauliVector& b) { return a ^= b; }
    friend bool operator==(const PauliVector&, const PauliVector&) = default;
};

/// GF(4) string over {0, 1, w, W} (w = omega, W = omega bar) to (alpha, beta)
/// under 0 -> (0,0), 1 -> (1,1), w -> (1,0), W -> (0,1).
PauliVector gray_encode(std::string_view symbols);
std::string gray_decode(const PauliVector& p);

/// alpha_p . beta_q + alpha_q . beta_p mod 2; false iff the operators commute.
bool symplectic_product(const PauliVector& p, const PauliVector& q);

/// Number of qubits carrying X, Y or Z.
std::size_t hamming_weight(const PauliVector& p);
/// w_x + 2 w_y + w_z = popcount(alpha) + popcount(beta).
std::size_t binary_weight(const PauliVector& p);

/// k x 2n generator matrix of an additive code; rows are nonzero and
/// linearly independent over F2, k <= n.
class GeneratorMatrix {
   public:
    GeneratorMatrix(std::size_t n, std::vector<PauliVector> rows);
    /// The B-form code (B | I): row i is (B_i | e_i).
    static GeneratorMatrix from_graph(const Graph& b);

    std::size_t n() const { return n_; }
    std::size_t k() const { return rows_.size(); }
    const std::vector<PauliVector>& rows() const { return rows_; }
    const PauliVector& row(std::size_t i) const { return rows_[i]; }

    /// The graph B when the rows are literally (B | I), with B symmetric and
    /// zero on the diagonal.
    std::optional<Graph> as_bform_graph() const;

   private:
    std::size_t n_;
    std::vector<PauliVector> rows_;
};

bool is_self_dual(const GeneratorMatrix& g);
/// Every generator has alpha . beta = 0 mod 2.
bool is_real(const GeneratorMatrix& g);

/// One T-equivalence step recorded by bform_reduce.
struct TransformStep {
    enum class Kind {
        row_swap,         ///< swap rows a and b
        row_add,          ///< row b ^= row a
        alpha_beta_swap,  ///< exchange alpha and beta at qubit a in every row
        column_swap,      ///< exchange qubits a and b in every row
    };
    Kind kind;
    std::size_t a = 0;
    std::size_t b = 0;

    friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

std::string to_string(const TransformStep& step);

struct BFormCode {
    std::size_t n = 0;
    Graph b;
    std::vector<TransformStep> log;
};

/// Brings a real self-dual code to (B | I) using row operations, qubit
/// permutations and alpha/beta swaps. Pivots on the leftmost beta column,
/// taking the lowest-index row; an empty pivot column is first repaired by
/// an alpha/beta swap, then by swapping in the nearest later qubit.
BFormCode bform_reduce(const GeneratorMatrix& g);

/// Applies a transformation log to the rows of g.
std::vector<PauliVector> replay_transform(const GeneratorMatrix& g, const std::vector<TransformStep>& log);

/// Largest generator count for which full codeword enumeration is allowed.
constexpr std::size_t kMaxEnumerationRank = 28;

/// Enumerates all 2^k F2-combinations of the generators in Gray-code order,
/// starting with the zero codeword.
class CodewordStream {
   public:
    explicit CodewordStream(const GeneratorMatrix& g);

    /// Writes the next codeword and returns true, or returns false when done.
    bool next(PauliVector& out);
    /// Coefficient vector of the codeword last returned (bit i = row i).
    std::uint64_t coefficients() const { return coeffs_; }

   private:
    const GeneratorMatrix* g_;
    PauliVector current_;
    std::uint64_t step_ = 0;
    std::uint64_t coeffs_ = 0;
};

std::vector<PauliVector> codewords(const GeneratorMatrix& g);

enum class DistanceKind { hamming, binary };
enum class SearchMode { automatic, exhaustive, bounded };

struct SearchBudget {
    std::size_t max_weight = 12;
    std::uint64_t max_candidates = 10'000'000'000ULL;
    double wall_clock_seconds = 0;  ///< 0 disables the wall-clock check
    std::uint64_t progress_interval = 100'000'000ULL;
    std::function<void(std::uint64_t candidates, std::size_t weight_class)> progress;
};

struct DistanceResult {
    std::size_t value = 0;
    bool exact = false;
    std::optional<PauliVector> witness;
    /// Coefficient vector u of the witness (bit i = generator i).
    std::optional<BitVec> witness_coefficients;
    /// Highest weight class searched exhaustively; -1 for full enumeration.
    long searched_weight = -1;
    /// Certified lower bound on the distance (equals value when exact).
    std::size_t lower_bound = 0;
    std::uint64_t candidates = 0;
    /// True when the bounded search also walked the alpha-reduced basis.
    bool used_second_information_set = false;
};

/// Minimum weight over nonzero codewords.
///
/// Exhaustive mode enumerates all 2^k codewords (k <= kMaxEnumerationRank).
/// Bounded mode needs a literal B-form matrix and walks coefficient vectors u
/// by increasing wt(u): every codeword is (uB | u), so after all u with
/// wt(u) <= W are seen, any unseen codeword weighs at least W+1 and a found
/// minimum m <= W+1 is exact. For the binary weight a second basis, reduced
/// on the alpha side, is walked too when rank(B) > n - W; unseen codewords
/// then weigh at least 2W+2-(n-rank B). Automatic mode picks exhaustive
/// when k allows it.
DistanceResult min_distance(const GeneratorMatrix& g, DistanceKind kind, const SearchBudget& budget = {},
                            SearchMode mode = SearchMode::automatic);

/// Same as min_distance on GeneratorMatrix::from_graph(b).
DistanceResult min_distance(const Graph& b, DistanceKind kind, const SearchBudget& budget = {},
                            SearchMode mode = SearchMode::automatic);

/// Inverse of a square F2 matrix given by rows, or nullopt when singular.
std::optional<std::vector<BitVec>> invert_f2(const std::vector<BitVec>& rows);

constexpr std::size_t kMaxLatticeQubits = 6;

/// Minimum squared Euclidean norm over nonzero vectors (c + 2z)/sqrt(2),
/// c a codeword embedded in {0,1}^{2n}, z integer with |z_i| <= box_radius.
/// Exhaustive over codewords with branch-and-bound over z.
Rational lattice_min_norm(const GeneratorMatrix& g, std::size_t box_radius);

}  // namespace qnl
