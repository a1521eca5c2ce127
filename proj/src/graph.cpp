#include "qnl/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "qnl/errors.hpp"
#include "qnl/random.hpp"

namespace qnl {

Graph::Graph(std::size_t n) : rows_(n, BitVec(n)) {}

Graph Graph::from_rows(std::vector<BitVec> rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw DimensionError("adjacency row " + std::to_string(i + 1) + " has length " +
                                 std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
        if (rows[i].get(i)) throw PreconditionError("nonzero diagonal at vertex " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i].get(j) != rows[j].get(i))
                throw PreconditionError("adjacency matrix not symmetric at (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")");
    Graph g;
    g.rows_ = std::move(rows);
    return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self loop at vertex " + std::to_string(u + 1));
        g.rows_[u].set(v);
        g.rows_[v].set(u);
    }
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.popcount();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

long Graph::regular_degree() const {
    if (rows_.empty()) return -1;
    std::size_t d = degree(0);
    for (std::size_t v = 1; v < size(); ++v)
        if (degree(v) != d) return -1;
    return static_cast<long>(d);
}

Graph clique(std::size_t t) {
    std::vector<BitVec> rows(t, BitVec(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (i != j) rows[i].set(j);
    return Graph::from_rows(std::move(rows));
}

namespace {

bool is_prime(std::size_t t) {
    if (t < 2) return false;
    for (std::size_t p = 2; p * p <= t; ++p)
        if (t % p == 0) return false;
    return true;
}

void check_permutation(const std::vector<std::size_t>& perm, std::size_t t, std::size_t label) {
    if (perm.size() != t)
        throw PreconditionError("sigma_" + std::to_string(label) + " has " + std::to_string(perm.size()) +
                                " entries, expected " + std::to_string(t));
    std::vector<bool> seen(t + 1, false);
    for (std::size_t image : perm) {
        if (image < 1 || image > t || seen[image])
            throw PreconditionError("sigma_" + std::to_string(label) + " is not a bijection on {1..t}");
        seen[image] = true;
    }
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> canonical_sigma_pairs(std::size_t blocks) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t gap = blocks - 1; gap >= 2 && blocks >= 3; --gap)
        for (std::size_t i = 1; i + gap <= blocks; ++i) pairs.emplace_back(i, i + gap);
    return pairs;
}

std::vector<std::vector<std::size_t>> resolve_sigmas(const NestedCliqueSpec& spec) {
    const std::size_t t = spec.t;
    const std::size_t count = canonical_sigma_pairs(spec.block_count()).size();
    std::vector<std::vector<std::size_t>> sigmas;
    switch (spec.rule) {
        case SigmaRule::explicit_list:
            if (spec.sigmas.size() != count)
                throw PreconditionError("expected " + std::to_string(count) + " permutations, got " +
                                        std::to_string(spec.sigmas.size()));
            sigmas = spec.sigmas;
            break;
        case SigmaRule::paper_affine:
            if (t < 3 || t % 2 == 0 || !is_prime(t))
                throw PreconditionError("paper-affine permutations need t to be an odd prime, got t=" +
                                        std::to_string(t));
            if (spec.block_count() != t) throw PreconditionError("paper-affine permutations need t blocks");
            for (std::size_t k = 1; k <= count; ++k) {
                std::size_t l = (k - 1) / t;
                std::size_t m = (k - 1) % t + 1;
                std::vector<std::size_t> perm(t);
                for (std::size_t i = 1; i <= t; ++i) perm[i - 1] = (m - 1 + (i - 1) * (l + 1)) % t + 1;
                sigmas.push_back(std::move(perm));
            }
            break;
        case SigmaRule::cyclic:
            for (std::size_t k = 0; k < count; ++k) {
                std::vector<std::size_t> perm(t);
                for (std::size_t i = 1; i <= t; ++i) perm[i - 1] = i % t + 1;
                sigmas.push_back(std::move(perm));
            }
            break;
        case SigmaRule::identity:
            for (std::size_t k = 0; k < count; ++k) {
                std::vector<std::size_t> perm(t);
                std::iota(perm.begin(), perm.end(), 1);
                sigmas.push_back(std::move(perm));
            }
            break;
    }
    for (std::size_t k = 0; k < sigmas.size(); ++k) check_permutation(sigmas[k], t, k + 1);
    return sigmas;
}

Graph nested_clique(const NestedCliqueSpec& spec) {
    const std::size_t t = spec.t;
    const std::size_t b = spec.block_count();
    if (t < 1 || b < 1) throw PreconditionError("nested clique needs t >= 1 and at least one block");
    const auto sigmas = resolve_sigmas(spec);
    const auto pairs = canonical_sigma_pairs(b);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto vertex = [t](std::size_t block, std::size_t i) { return (block - 1) * t + (i - 1); };
    for (std::size_t blk = 1; blk <= b; ++blk) {
        for (std::size_t i = 1; i <= t; ++i)
            for (std::size_t j = i + 1; j <= t; ++j) edges.emplace_back(vertex(blk, i), vertex(blk, j));
        if (blk + 1 <= b)
            for (std::size_t i = 1; i <= t; ++i) edges.emplace_back(vertex(blk, i), vertex(blk + 1, i));
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [bi, bj] = pairs[k];
        for (std::size_t i = 1; i <= t; ++i) edges.emplace_back(vertex(bi, i), vertex(bj, sigmas[k][i - 1]));
    }
    return Graph::from_edges(t * b, edges);
}

Graph circulant(const std::vector<bool>& first_row) {
    const std::size_t n = first_row.size();
    if (n == 0) throw PreconditionError("circulant needs a nonempty first row");
    if (first_row[0]) throw PreconditionError("circulant first row must start with 0 (zero diagonal)");
    for (std::size_t i = 1; i < n; ++i)
        if (first_row[i] != first_row[n - i])
            throw PreconditionError("circulant first row is not symmetric: r_" + std::to_string(i) +
                                    " != r_" + std::to_string(n - i));
    std::vector<BitVec> rows(n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (first_row[(j + n - i) % n]) rows[i].set(j);
    return Graph::from_rows(std::move(rows));
}

Graph two_circulant(const std::vector<bool>& a_row, const std::vector<bool>& b_row) {
    const std::size_t n = a_row.size();
    if (b_row.size() != n) throw DimensionError("two-circulant rows must have equal length");
    Graph a = circulant(a_row);
    std::vector<BitVec> rows(2 * n, BitVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a.adjacent(i, j)) {
                rows[i].set(j);
                rows[n + i].set(n + j);
            }
            if (b_row[(j + n - i) % n]) {
                rows[i].set(n + j);  // B
                rows[n + j].set(i);  // B^T
            }
        }
    }
    return Graph::from_rows(std::move(rows));
}

namespace {

// One pairing attempt; empty result means the attempt got stuck.
std::vector<std::pair<std::size_t, std::size_t>> try_pairing(std::size_t n, std::size_t degree, Rng& rng) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> stubs;
    stubs.reserve(n * degree);
    for (std::size_t d = 0; d < degree; ++d)
        for (std::size_t v = 0; v < n; ++v) stubs.push_back(v);

    while (!stubs.empty()) {
        std::map<std::size_t, std::size_t> leftover;
        rng.shuffle(stubs);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            std::size_t u = std::min(stubs[i], stubs[i + 1]);
            std::size_t v = std::max(stubs[i], stubs[i + 1]);
            if (u != v && !edges.contains({u, v})) {
                edges.insert({u, v});
            } else {
                ++leftover[u];
                ++leftover[v];
            }
        }
        if (leftover.empty()) break;
        bool progress_possible = false;
        for (auto it = leftover.begin(); it != leftover.end() && !progress_possible; ++it)
            for (auto jt = std::next(it); jt != leftover.end(); ++jt)
                if (!edges.contains({it->first, jt->first})) {
                    progress_possible = true;
                    break;
                }
        if (!progress_possible) return {};
        stubs.clear();
        for (auto [v, count] : leftover)
            for (std::size_t c = 0; c < count; ++c) stubs.push_back(v);
    }
    return {edges.begin(), edges.end()};
}

}  // namespace

Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed, std::size_t max_attempts) {
    if (n == 0) throw PreconditionError("random_regular needs n >= 1");
    if (degree >= n) throw PreconditionError("degree must be smaller than n");
    if ((n * degree) % 2 != 0) throw PreconditionError("n * degree must be even");
    if (degree == 0) return Graph(n);
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        auto edges = try_pairing(n, degree, rng);
        if (!edges.empty()) return Graph::from_edges(n, edges);
    }
    throw BudgetError("random_regular: no simple graph after " + std::to_string(max_attempts) +
                          " attempts; retry with another seed",
                      -1);
}

Graph random_graph(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.coin()) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
    return true;
}

namespace {

constexpr std::size_t kMisWords = kMaxMisVertices / 64;

struct VSet {
    std::array<std::uint64_t, kMisWords> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    std::size_t lowest() const {
        for (std::size_t i = 0; i < kMisWords; ++i)
            if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
        return kMaxMisVertices;
    }
    VSet operator&(const VSet& o) const {
        VSet r;
        for (std::size_t i = 0; i < kMisWords; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
};

// Vertices are renumbered so that bit positions follow `order`; the search
// works on positions and translates back when recording the incumbent.
class MisSearch {
   public:
    MisSearch(const Graph& g, const MisBudget& budget) : budget_(budget), n_(g.size()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
        adj_.resize(n_);
        non_adj_.resize(n_);
        for (std::size_t p = 0; p < n_; ++p) {
            for (std::size_t q = 0; q < n_; ++q) {
                if (p == q) continue;
                if (g.adjacent(order_[p], order_[q])) {
                    adj_[p].set(q);
                } else {
                    non_adj_[p].set(q);
                }
            }
        }
        seed_with_greedy();
    }

    IndependentSet run() {
        VSet all;
        for (std::size_t p = 0; p < n_; ++p) all.set(p);
        if (n_ > 0) expand(all);
        IndependentSet out;
        out.alpha = best_.size();
        for (std::size_t p : best_) out.witness.push_back(order_[p]);
        std::sort(out.witness.begin(), out.witness.end());
        out.nodes = nodes_;
        return out;
    }

   private:
    void seed_with_greedy() {
        VSet remaining;
        for (std::size_t p = 0; p < n_; ++p) remaining.set(p);
        while (!remaining.empty()) {
            std::size_t p = remaining.lowest();  // positions are sorted by ascending degree
            best_.push_back(p);
            remaining = remaining & non_adj_[p];
        }
    }

    void expand(VSet candidates) {
        if (++nodes_ > budget_.max_nodes)
            throw BudgetError("independence_number: node budget exhausted; best size found " +
                                  std::to_string(best_.size()),
                              static_cast<long long>(best_.size()));

        // Greedy cover of the candidates by cliques; cover[i] bounds how many
        // of verts[0..i] can be picked together.
        std::vector<std::size_t> verts;
        std::vector<std::size_t> cover;
        verts.reserve(candidates.count());
        VSet uncovered = candidates;
        std::size_t cliques = 0;
        while (!uncovered.empty()) {
            ++cliques;
            VSet joinable = uncovered;
            while (!joinable.empty()) {
                std::size_t v = joinable.lowest();
                verts.push_back(v);
                cover.push_back(cliques);
                uncovered.reset(v);
                joinable = joinable & adj_[v];
            }
        }

        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current_.size() + cover[idx] <= best_.size()) return;
            std::size_t v = verts[idx];
            current_.push_back(v);
            VSet next = candidates & non_adj_[v];
            if (next.empty()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    MisBudget budget_;
    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<VSet> adj_;
    std::vector<VSet> non_adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

IndependentSet independence_number(const Graph& g, const MisBudget& budget) {
    if (g.size() > kMaxMisVertices)
        throw LimitError("independence_number supports at most " + std::to_string(kMaxMisVertices) +
                         " vertices, got " + std::to_string(g.size()));
    return MisSearch(g, budget).run();
}

}  // namespace qnl
