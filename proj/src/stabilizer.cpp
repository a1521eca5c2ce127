#include "qnl/stabilizer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>

#include "qnl/errors.hpp"
#include "qnl/parallel.hpp"

namespace qnl {

PauliVector::PauliVector(BitVec a, BitVec b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.size() != beta.size())
        throw DimensionError("alpha has " + std::to_string(alpha.size()) + " bits but beta has " +
                             std::to_string(beta.size()));
}

PauliVector gray_encode(std::string_view symbols) {
    PauliVector p(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        switch (symbols[i]) {
            case '0':
                break;
            case '1':
                p.alpha.set(i);
                p.beta.set(i);
                break;
            case 'w':
                p.alpha.set(i);
                break;
            case 'W':
                p.beta.set(i);
                break;
            default:
                throw FormatError("invalid GF(4) symbol '" + std::string(1, symbols[i]) + "' at index " +
                                  std::to_string(i + 1) + " (expected 0, 1, w or W)");
        }
    }
    return p;
}

std::string gray_decode(const PauliVector& p) {
    static constexpr char kSymbols[4] = {'0', 'W', 'w', '1'};  // index = 2*alpha + beta
    std::string s(p.size(), '0');
    for (std::size_t i = 0; i < p.size(); ++i) s[i] = kSymbols[2 * p.alpha.get(i) + p.beta.get(i)];
    return s;
}

bool symplectic_product(const PauliVector& p, const PauliVector& q) {
    if (p.size() != q.size())
        throw DimensionError("symplectic product of " + std::to_string(p.size()) + "- and " +
                             std::to_string(q.size()) + "-qubit vectors");
    return p.alpha.dot(q.beta) != q.alpha.dot(p.beta);
}

std::size_t hamming_weight(const PauliVector& p) { return (p.alpha | p.beta).popcount(); }

std::size_t binary_weight(const PauliVector& p) { return p.alpha.popcount() + p.beta.popcount(); }

namespace {

// Rank of a set of 2n-bit vectors over F2.
std::size_t f2_rank(std::vector<BitVec> rows) {
    std::size_t rank = 0;
    const std::size_t width = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

BitVec concat(const PauliVector& p) {
    const std::size_t n = p.size();
    BitVec v(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.alpha.get(i)) v.set(i);
        if (p.beta.get(i)) v.set(n + i);
    }
    return v;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(std::size_t n, std::vector<PauliVector> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ == 0) throw PreconditionError("a code needs at least one qubit");
    if (rows_.size() > n_)
        throw PreconditionError("generator matrix has " + std::to_string(rows_.size()) + " rows for " +
                                std::to_string(n_) + " qubits (k <= n required)");
    std::vector<BitVec> flat;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != n_)
            throw DimensionError("row " + std::to_string(i + 1) + " has " + std::to_string(rows_[i].size()) +
                                 " qubits, expected " + std::to_string(n_));
        if (rows_[i].is_zero()) throw PreconditionError("row " + std::to_string(i + 1) + " is zero");
        flat.push_back(concat(rows_[i]));
    }
    if (f2_rank(flat) != rows_.size()) throw PreconditionError("generator rows are linearly dependent");
}

GeneratorMatrix GeneratorMatrix::from_graph(const Graph& b) {
    const std::size_t n = b.size();
    std::vector<PauliVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PauliVector p(b.row(i), BitVec(n));
        p.beta.set(i);
        rows.push_back(std::move(p));
    }
    return GeneratorMatrix(n, std::move(rows));
}

std::optional<Graph> GeneratorMatrix::as_bform_graph() const {
    if (k() != n_) return std::nullopt;
    std::vector<BitVec> adj;
    adj.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        BitVec unit(n_);
        unit.set(i);
        if (rows_[i].beta != unit) return std::nullopt;
        adj.push_back(rows_[i].alpha);
    }
    try {
        return Graph::from_rows(std::move(adj));
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
}

bool is_self_dual(const GeneratorMatrix& g) {
    if (g.k() != g.n()) return false;
    for (std::size_t i = 0; i < g.k(); ++i)
        for (std::size_t j = i + 1; j < g.k(); ++j)
            if (symplectic_product(g.row(i), g.row(j))) return false;
    return true;
}

bool is_real(const GeneratorMatrix& g) {
    return std::all_of(g.rows().begin(), g.rows().end(), [](const PauliVector& p) { return !p.alpha.dot(p.beta); });
}

std::string to_string(const TransformStep& step) {
    const std::string a = std::to_string(step.a + 1);
    const std::string b = std::to_string(step.b + 1);
    switch (step.kind) {
        case TransformStep::Kind::row_swap:
            return "row_swap " + a + " " + b;
        case TransformStep::Kind::row_add:
            return "row_add " + a + " " + b;
        case TransformStep::Kind::alpha_beta_swap:
            return "alpha_beta_swap " + a;
        case TransformStep::Kind::column_swap:
            return "column_swap " + a + " " + b;
    }
    return "?";
}

namespace {

void apply_step(std::vector<PauliVector>& rows, const TransformStep& step) {
    switch (step.kind) {
        case TransformStep::Kind::row_swap:
            std::swap(rows[step.a], rows[step.b]);
            break;
        case TransformStep::Kind::row_add:
            rows[step.b] ^= rows[step.a];
            break;
        case TransformStep::Kind::alpha_beta_swap:
            for (auto& r : rows) {
                bool a = r.alpha.get(step.a);
                r.alpha.set(step.a, r.beta.get(step.a));
                r.beta.set(step.a, a);
            }
            break;
        case TransformStep::Kind::column_swap:
            for (auto& r : rows) {
                bool a = r.alpha.get(step.a);
                bool b = r.beta.get(step.a);
                r.alpha.set(step.a, r.alpha.get(step.b));
                r.beta.set(step.a, r.beta.get(step.b));
                r.alpha.set(step.b, a);
                r.beta.set(step.b, b);
            }
            break;
    }
}

}  // namespace

std::vector<PauliVector> replay_transform(const GeneratorMatrix& g, const std::vector<TransformStep>& log) {
    std::vector<PauliVector> rows = g.rows();
    for (const auto& step : log) apply_step(rows, step);
    return rows;
}

BFormCode bform_reduce(const GeneratorMatrix& g) {
    if (!is_self_dual(g)) throw PreconditionError("bform_reduce needs a self-dual code");
    if (!is_real(g)) throw PreconditionError("bform_reduce needs a real code");
    const std::size_t n = g.n();
    std::vector<PauliVector> rows = g.rows();
    std::vector<TransformStep> log;
    auto record = [&](TransformStep step) {
        apply_step(rows, step);
        log.push_back(step);
    };
    auto find_pivot = [&](std::size_t col, std::size_t from) -> std::size_t {
        for (std::size_t r = from; r < n; ++r)
            if (rows[r].beta.get(col)) return r;
        return n;
    };
    auto column_has_support = [&](std::size_t col, std::size_t from) {
        for (std::size_t r = from; r < n; ++r)
            if (rows[r].beta.get(col) || rows[r].alpha.get(col)) return true;
        return false;
    };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = find_pivot(col, col);
        if (pivot == n) {
            if (!column_has_support(col, col)) {
                std::size_t other = col + 1;
                while (other < n && !column_has_support(other, col)) ++other;
                if (other == n)
                    throw ReductionError("B-form reduction stuck at pivot column " + std::to_string(col + 1), col);
                record({TransformStep::Kind::column_swap, col, other});
            }
            pivot = find_pivot(col, col);
            if (pivot == n) {
                record({TransformStep::Kind::alpha_beta_swap, col, col});
                pivot = find_pivot(col, col);
            }
            if (pivot == n)
                throw ReductionError("B-form reduction stuck at pivot column " + std::to_string(col + 1), col);
        }
        if (pivot != col) record({TransformStep::Kind::row_swap, col, pivot});
        for (std::size_t r = 0; r < n; ++r)
            if (r != col && rows[r].beta.get(col)) record({TransformStep::Kind::row_add, col, r});
    }

    std::vector<BitVec> adj;
    adj.reserve(n);
    for (auto& r : rows) adj.push_back(r.alpha);
    return BFormCode{n, Graph::from_rows(std::move(adj)), std::move(log)};
}

CodewordStream::CodewordStream(const GeneratorMatrix& g) : g_(&g), current_(g.n()) {
    if (g.k() > kMaxEnumerationRank)
        throw LimitError("codeword enumeration needs k <= " + std::to_string(kMaxEnumerationRank) + ", got k=" +
                         std::to_string(g.k()) + "; use the bounded B-form search instead");
}

bool CodewordStream::next(PauliVector& out) {
    const std::uint64_t total = std::uint64_t{1} << g_->k();
    if (step_ >= total) return false;
    if (step_ > 0) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(step_));
        current_ ^= g_->row(bit);
        coeffs_ ^= std::uint64_t{1} << bit;
    }
    ++step_;
    out = current_;
    return true;
}

std::vector<PauliVector> codewords(const GeneratorMatrix& g) {
    std::vector<PauliVector> out;
    CodewordStream stream(g);
    PauliVector p;
    while (stream.next(p)) out.push_back(p);
    return out;
}

std::optional<std::vector<BitVec>> invert_f2(const std::vector<BitVec>& rows) {
    const std::size_t n = rows.size();
    std::vector<BitVec> left = rows;
    std::vector<BitVec> right(n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i) right[i].set(i);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !left[pivot].get(col)) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(left[col], left[pivot]);
        std::swap(right[col], right[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && left[r].get(col)) {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    return right;
}

namespace {

std::size_t pair_weight(const BitVec& a, const BitVec& b, DistanceKind kind) {
    std::size_t w = 0;
    const auto& aw = a.words();
    const auto& bw = b.words();
    for (std::size_t i = 0; i < aw.size(); ++i) {
        if (kind == DistanceKind::binary) {
            w += static_cast<std::size_t>(std::popcount(aw[i]) + std::popcount(bw[i]));
        } else {
            w += static_cast<std::size_t>(std::popcount(aw[i] | bw[i]));
        }
    }
    return w;
}

bool lex_less_word(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return ((a >> std::countr_zero(diff)) & 1U) == 0;
}

struct WordBest {
    std::size_t value = std::numeric_limits<std::size_t>::max();
    std::uint64_t u = 0;

    void offer(std::size_t v, std::uint64_t coeffs) {
        if (v < value || (v == value && lex_less_word(coeffs, u))) {
            value = v;
            u = coeffs;
        }
    }
};

PauliVector combine_rows(const GeneratorMatrix& g, const BitVec& coeffs) {
    PauliVector p(g.n());
    for (std::size_t i = 0; i < g.k(); ++i)
        if (coeffs.get(i)) p ^= g.row(i);
    return p;
}

DistanceResult exhaustive_distance(const GeneratorMatrix& g, DistanceKind kind) {
    DistanceResult result;
    result.exact = true;
    const std::size_t k = g.k();
    if (k == 0) return result;

    const std::size_t high = std::min<std::size_t>(k, 6);
    const std::size_t low = k - high;
    const std::size_t chunks = std::size_t{1} << high;
    std::vector<WordBest> per_chunk(chunks);

    parallel_for(chunks, [&](std::size_t chunk) {
        PauliVector acc(g.n());
        for (std::size_t b = 0; b < high; ++b)
            if ((chunk >> b) & 1U) acc ^= g.row(low + b);
        const std::uint64_t prefix = static_cast<std::uint64_t>(chunk) << low;
        std::uint64_t gray = 0;
        WordBest best;
        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t j = 0; j < steps; ++j) {
            if (j > 0) {
                std::size_t bit = static_cast<std::size_t>(std::countr_zero(j));
                acc ^= g.row(bit);
                gray ^= std::uint64_t{1} << bit;
            }
            const std::uint64_t u = prefix | gray;
            if (u == 0) continue;
            best.offer(pair_weight(acc.alpha, acc.beta, kind), u);
        }
        per_chunk[chunk] = best;
    });

    WordBest best;
    for (const auto& c : per_chunk)
        if (c.value != std::numeric_limits<std::size_t>::max()) best.offer(c.value, c.u);
    BitVec coeffs = BitVec::from_word(k, best.u);
    result.value = best.value;
    result.lower_bound = best.value;
    result.witness = combine_rows(g, coeffs);
    result.witness_coefficients = coeffs;
    result.candidates = (std::uint64_t{1} << k) - 1;
    return result;
}

std::uint64_t binomial_saturating(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        c = c * (n - r + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(c);
}

struct BitBest {
    std::size_t value = std::numeric_limits<std::size_t>::max();
    BitVec u;
    bool found = false;

    void offer(std::size_t v, const BitVec& coeffs) {
        if (!found || v < value || (v == value && lex_less(coeffs, u))) {
            value = v;
            u = coeffs;
            found = true;
        }
    }
};

// Walks every `weight`-subset S of {0..k-1} whose smallest element is
// `lead` and hands the visitor the XOR of rows over S.
template <typename Visit>
void walk_weight_class(const std::vector<PauliVector>& rows, std::size_t weight, std::size_t lead, Visit&& visit) {
    const std::size_t k = rows.size();
    std::vector<PauliVector> acc(weight + 1);
    std::vector<std::size_t> idx(weight + 1, 0);
    acc[1] = rows[lead];
    idx[1] = lead;
    if (weight == 1) {
        visit(acc[1]);
        return;
    }
    // depth d chooses idx[d] in (idx[d-1], k - 1 - (weight - d)]
    std::size_t depth = 2;
    idx[2] = lead;
    while (depth >= 2) {
        ++idx[depth];
        if (idx[depth] > k - 1 - (weight - depth)) {
            --depth;
            continue;
        }
        acc[depth] = acc[depth - 1];
        acc[depth] ^= rows[idx[depth]];
        if (depth == weight) {
            visit(acc[depth]);
        } else {
            ++depth;
            idx[depth] = idx[depth - 1];
        }
    }
}

// Generators (T B | T) of the same code with T invertible, chosen so the
// alpha parts of the first rank(B) rows are reduced on distinct pivot
// qubits and the remaining alpha parts vanish. Returns the rows and rank(B).
std::pair<std::vector<PauliVector>, std::size_t> alpha_systematic_rows(const Graph& b) {
    const std::size_t n = b.size();
    std::vector<PauliVector> rows = GeneratorMatrix::from_graph(b).rows();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && !rows[pivot].alpha.get(col)) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != rank && rows[r].alpha.get(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    return {std::move(rows), rank};
}

DistanceResult bounded_distance(const Graph& b, DistanceKind kind, const SearchBudget& budget) {
    const std::size_t n = b.size();
    DistanceResult result;
    const auto start = std::chrono::steady_clock::now();

    // A second information set on the alpha side: with rank r, every codeword
    // whose coefficients in the reduced basis weigh more than W carries at
    // least W+1-(n-r) alpha bits, disjoint from the beta bits counted by the
    // first set. Only the binary weight adds the two contributions.
    std::vector<std::vector<PauliVector>> sides = {GeneratorMatrix::from_graph(b).rows()};
    std::size_t deficiency = n;
    if (kind == DistanceKind::binary) {
        auto [rows, rank] = alpha_systematic_rows(b);
        deficiency = n - rank;
        if (deficiency < budget.max_weight) sides.push_back(std::move(rows));
    }
    const bool dual = sides.size() == 2;
    result.used_second_information_set = dual;

    BitBest best;
    std::mutex progress_mutex;
    std::atomic<std::uint64_t> counted{0};
    std::uint64_t next_report = budget.progress_interval;

    auto certificate = [&](long searched) -> std::size_t {
        if (searched < 0) return 0;
        const std::size_t s = static_cast<std::size_t>(searched) + 1;
        return dual && s > deficiency ? 2 * s - deficiency : s;
    };

    long searched = 0;  // weight class 0 is the zero vector, excluded
    for (std::size_t w = 1; w <= std::min(budget.max_weight, n); ++w) {
        const std::uint64_t cost = binomial_saturating(n, w);
        const std::uint64_t total_cost = cost > std::numeric_limits<std::uint64_t>::max() / sides.size()
                                             ? std::numeric_limits<std::uint64_t>::max()
                                             : cost * sides.size();
        if (result.candidates + total_cost > budget.max_candidates || total_cost > budget.max_candidates) break;
        if (budget.wall_clock_seconds > 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() > budget.wall_clock_seconds) break;
        }

        const std::size_t leads = n - w + 1;
        std::vector<BitBest> per_task(leads * sides.size());
        parallel_for(per_task.size(), [&](std::size_t task) {
            const std::size_t lead = task % leads;
            const auto& rows = sides[task / leads];
            BitBest local;
            std::uint64_t local_count = 0;
            // the beta part of a codeword is its coefficient vector u
            walk_weight_class(rows, w, lead, [&](const PauliVector& c) {
                ++local_count;
                local.offer(pair_weight(c.alpha, c.beta, kind), c.beta);
            });
            per_task[task] = std::move(local);
            std::uint64_t total = counted += local_count;
            if (budget.progress) {
                std::lock_guard lock(progress_mutex);
                if (total >= next_report) {
                    budget.progress(total, w);
                    while (next_report <= total) next_report += budget.progress_interval;
                }
            }
        });
        for (const auto& t : per_task)
            if (t.found) best.offer(t.value, t.u);
        result.candidates += total_cost;
        searched = static_cast<long>(w);
        if (best.found && (best.value <= certificate(searched) || w == n)) {
            result.exact = true;
            break;
        }
    }

    result.searched_weight = searched;
    if (best.found) {
        result.value = best.value;
        GeneratorMatrix g = GeneratorMatrix::from_graph(b);
        result.witness = combine_rows(g, best.u);
        result.witness_coefficients = best.u;
    }
    result.lower_bound = result.exact ? result.value
                                      : (best.found ? std::min(best.value, certificate(searched))
                                                    : certificate(searched));
    return result;
}

}  // namespace

DistanceResult min_distance(const GeneratorMatrix& g, DistanceKind kind, const SearchBudget& budget, SearchMode mode) {
    if (mode == SearchMode::automatic)
        mode = g.k() <= kMaxEnumerationRank ? SearchMode::exhaustive : SearchMode::bounded;
    if (mode == SearchMode::exhaustive) {
        if (g.k() > kMaxEnumerationRank)
            throw LimitError("exhaustive distance needs k <= " + std::to_string(kMaxEnumerationRank) + ", got k=" +
                             std::to_string(g.k()) + "; use bounded mode on a B-form code");
        return exhaustive_distance(g, kind);
    }
    auto b = g.as_bform_graph();
    if (!b) throw ModeError("bounded distance search needs a generator matrix in (B | I) form");
    return bounded_distance(*b, kind, budget);
}

DistanceResult min_distance(const Graph& b, DistanceKind kind, const SearchBudget& budget, SearchMode mode) {
    if (mode == SearchMode::automatic)
        mode = b.size() <= kMaxEnumerationRank ? SearchMode::exhaustive : SearchMode::bounded;
    if (mode == SearchMode::bounded) return bounded_distance(b, kind, budget);
    return min_distance(GeneratorMatrix::from_graph(b), kind, budget, mode);
}

namespace {

class LatticeSearch {
   public:
    LatticeSearch(std::size_t radius) : radius_(static_cast<long>(radius)) {}

    void visit_coset(const std::vector<int>& c) {
        coset_ = c;
        descend(0, 0, false);
    }
    long best() const { return best_; }

   private:
    void descend(std::size_t i, long partial, bool nonzero) {
        if (partial >= best_) return;
        if (i == coset_.size()) {
            if (nonzero) best_ = partial;
            return;
        }
        for (long z = -radius_; z <= radius_; ++z) {
            long x = coset_[i] + 2 * z;
            descend(i + 1, partial + x * x, nonzero || x != 0);
        }
    }

    long radius_;
    long best_ = std::numeric_limits<long>::max();
    std::vector<int> coset_;
};

}  // namespace

Rational lattice_min_norm(const GeneratorMatrix& g, std::size_t box_radius) {
    if (g.n() > kMaxLatticeQubits)
        throw LimitError("lattice_min_norm supports n <= " + std::to_string(kMaxLatticeQubits) + ", got n=" +
                         std::to_string(g.n()));
    if (box_radius < 1) throw PreconditionError("box_radius must be at least 1");
    LatticeSearch search(box_radius);
    for (const auto& c : codewords(g)) {
        std::vector<int> coords(2 * g.n());
        for (std::size_t i = 0; i < g.n(); ++i) {
            coords[i] = c.alpha.get(i);
            coords[g.n() + i] = c.beta.get(i);
        }
        search.visit_coset(coords);
    }
    return Rational(search.best(), 2);
}

}  // namespace qnl
