#include "qnl/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>
#include <map>

#include "qnl/errors.hpp"
#include "qnl/parallel.hpp"
#include "qnl/random.hpp"
#include "qnl/stabilizer.hpp"

namespace qnl::verify {

void CheckReport::merge(const CheckReport& other) {
    instances += other.instances;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    elapsed += other.elapsed;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

namespace {

std::string fnv_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

class Timer {
   public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

void expect_equal(CheckReport& report, const std::string& input, const std::string& lhs, const std::string& rhs) {
    ++report.instances;
    if (lhs != rhs) report.failures.push_back({input, lhs, rhs});
}

void require_max_n(std::size_t n, std::size_t limit, const char* check) {
    if (n > limit)
        throw LimitError(std::string(check) + " supports n <= " + std::to_string(limit) + ", got n=" +
                         std::to_string(n));
}

std::uint64_t parity(std::uint64_t x) { return static_cast<std::uint64_t>(std::popcount(x) & 1); }

CheckReport new_report(std::string name, std::optional<std::uint64_t> seed = std::nullopt) {
    CheckReport report;
    report.name = std::move(name);
    report.seed = seed;
    return report;
}

std::int64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    std::int64_t c = 1;
    for (std::size_t i = 1; i <= r; ++i) c = c * static_cast<std::int64_t>(n - r + i) / static_cast<std::int64_t>(i);
    return c;
}

}  // namespace

std::string digest(const Graph& g) {
    std::string rows;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) rows += '/';
        rows += g.row(i).to_string();
    }
    if (g.size() <= 12) return "graph:" + rows;
    return "graph:n=" + std::to_string(g.size()) + ":fnv=" + fnv_hex(rows);
}

std::string digest(const TruthTable& t) {
    std::string signs = t.to_signs();
    if (t.n() <= 6) return "table:" + signs;
    return "table:n=" + std::to_string(t.n()) + ":fnv=" + fnv_hex(signs);
}

CheckReport check_wk(const TruthTable& t) {
    require_max_n(t.n(), 10, "check_wk");
    Timer timer;
    CheckReport report = new_report("wk");
    // Right side: transform the power spectrum once more.
    auto power = wht(t);
    for (auto& v : power) v *= v;
    for (std::uint64_t half = 1; half < t.length(); half <<= 1)
        for (std::uint64_t base = 0; base < t.length(); base += 2 * half)
            for (std::uint64_t x = base; x < base + half; ++x) {
                std::int64_t lo = power[x];
                std::int64_t hi = power[x + half];
                power[x] = lo + hi;
                power[x + half] = lo - hi;
            }
    const std::string input = digest(t);
    for (std::uint64_t a = 0; a < t.length(); ++a) {
        const std::int64_t lhs = static_cast<std::int64_t>(t.length()) * periodic_autocorrelation(t, Mask{a});
        expect_equal(report, input + " a=" + std::to_string(a), std::to_string(lhs), std::to_string(power[a]));
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_eq322(const TruthTable& t, std::uint64_t seed, std::size_t draws) {
    require_max_n(t.n(), 6, "check_eq322");
    Timer timer;
    CheckReport report = new_report("eq322", seed);
    Rng rng(seed);
    const std::uint64_t full = t.full_mask();
    const std::string input = digest(t);
    for (std::size_t d = 0; d < draws; ++d) {
        const std::uint64_t mu = rng.next() & full;
        const std::uint64_t free = full & ~mu;
        const std::uint64_t k = rng.next() & mu;
        const std::uint64_t a = rng.next() & free;
        const std::uint64_t c = rng.next() & free;

        std::int64_t lhs = 0;
        for (std::uint64_t s = free;; s = (s - 1) & free) {
            const std::uint64_t x = k | s;
            const bool exponent = t.value(x) ^ t.value(x ^ a) ^ static_cast<bool>(parity(c & a & ~x));
            lhs += exponent ? -1 : 1;
            if (s == 0) break;
        }
        std::int64_t power_sum = 0;
        for (std::uint64_t u = free;; u = (u - 1) & free) {
            const std::int64_t p2 = ihn_spectrum(t, Mask{u}, Mask{c}, Mask{k}, Mask{mu}).norm2();
            power_sum += parity(u & a) ? -p2 : p2;
            if (u == 0) break;
        }
        const std::int64_t scale = std::int64_t{1} << std::popcount(free);
        const GaussianInt left(scale * lhs);
        const GaussianInt right = GaussianInt::i_pow(-std::popcount(c & a)) * GaussianInt(power_sum);
        expect_equal(report,
                     input + " mu=" + std::to_string(mu) + " k=" + std::to_string(k) + " a=" + std::to_string(a) +
                         " c=" + std::to_string(c),
                     to_string(left), to_string(right));
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_eq44(const TruthTable& t, std::uint64_t seed, std::size_t draws) {
    require_max_n(t.n(), 8, "check_eq44");
    Timer timer;
    CheckReport report = new_report("eq44", seed);
    Rng rng(seed);
    const std::uint64_t full = t.full_mask();
    const std::string input = digest(t);
    for (std::size_t d = 0; d < draws; ++d) {
        const std::uint64_t mu = rng.next() & full;
        const std::uint64_t free = full & ~mu;
        const std::uint64_t k = rng.next() & mu;
        std::vector<std::pair<std::uint64_t, std::int64_t>> spectrum;
        for (std::uint64_t u = free;; u = (u - 1) & free) {
            const std::int64_t p = ih_spectrum(t, Mask{u}, Mask{k}, Mask{mu});
            spectrum.emplace_back(u, p * p);
            if (u == 0) break;
        }
        const std::int64_t scale = std::int64_t{1} << std::popcount(free);
        for (std::uint64_t a = free;; a = (a - 1) & free) {
            const std::int64_t lhs = scale * fixed_extended_autocorrelation(t, Mask{a}, Mask{mu}, Mask{k});
            std::int64_t rhs = 0;
            for (auto [u, p2] : spectrum) rhs += parity(u & a) ? -p2 : p2;
            expect_equal(report,
                         input + " mu=" + std::to_string(mu) + " k=" + std::to_string(k) + " a=" + std::to_string(a),
                         std::to_string(lhs), std::to_string(rhs));
            if (a == 0) break;
        }
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_apc_equals_d(const Graph& g) {
    require_max_n(g.size(), 12, "check_apc_equals_d");
    Timer timer;
    CheckReport report = new_report("apc-d");
    const auto apc = apc_distance(from_graph(g), CorrelationRoute::generic);
    const auto d = min_distance(GeneratorMatrix::from_graph(g), DistanceKind::hamming, {}, SearchMode::exhaustive);
    expect_equal(report, digest(g), std::to_string(apc.value), std::to_string(d.value));
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_epc_equals_db(const Graph& g) {
    Timer timer;
    CheckReport report = new_report("epc-db");
    std::size_t epc = 0;
    std::size_t db = 0;
    if (g.size() <= 12) {
        epc = epc_distance(from_graph(g), CorrelationRoute::generic).value;
        db = min_distance(GeneratorMatrix::from_graph(g), DistanceKind::binary, {}, SearchMode::exhaustive).value;
    } else {
        epc = epc_distance(from_graph(g), CorrelationRoute::quadratic).value;
        SearchBudget budget;
        budget.max_weight = g.size();
        auto result = min_distance(g, DistanceKind::binary, budget, SearchMode::bounded);
        db = result.value;
        if (!result.exact) report.notes.push_back("binary distance only bounded for " + digest(g));
    }
    expect_equal(report, digest(g), std::to_string(epc), std::to_string(db));
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_par_bound(const TruthTable& t) {
    require_max_n(t.n(), 8, "check_par_bound");
    Timer timer;
    CheckReport report = new_report("par-bound");
    const std::size_t n = t.n();
    const std::size_t d = epc_distance(t).value;
    const std::uint64_t full = t.full_mask();
    const std::string input = digest(t);
    for (std::uint64_t mu = 0; mu <= full; ++mu) {
        const std::size_t free_count = n - static_cast<std::size_t>(std::popcount(mu));
        std::int64_t tail = 0;
        for (std::size_t i = d > n - free_count ? d - (n - free_count) : 0; i <= free_count; ++i)
            tail += binomial(free_count, i);
        const std::int64_t bound = (std::int64_t{1} << free_count) * (tail + 1);
        const std::uint64_t free = full & ~mu;
        for (std::uint64_t k = mu;; k = (k - 1) & mu) {
            for (std::uint64_t u = free;; u = (u - 1) & free) {
                const std::int64_t p = ih_spectrum(t, Mask{u}, Mask{k}, Mask{mu});
                ++report.instances;
                if (p * p > bound)
                    report.failures.push_back({input + " mu=" + std::to_string(mu) + " k=" + std::to_string(k) +
                                                   " u=" + std::to_string(u),
                                               std::to_string(p * p), "<= " + std::to_string(bound)});
                if (u == 0) break;
            }
            if (k == 0) break;
        }
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_par_alpha(const Graph& g) {
    require_max_n(g.size(), kMaxParIhVars, "check_par_alpha");
    Timer timer;
    CheckReport report = new_report("par-alpha");
    const Rational par = par_ih(from_graph(g));
    const auto mis = independence_number(g);
    expect_equal(report, digest(g), par.str(), Rational(std::int64_t{1} << mis.alpha).str());
    if (!report.passed())
        report.notes.push_back(digest(g) + " alpha=" + std::to_string(mis.alpha) +
                               " max nullity=" + std::to_string(max_nullity(g)));
    report.elapsed = timer.elapsed();
    return report;
}

std::size_t max_nullity(const Graph& g) {
    const std::size_t n = g.size();
    require_max_n(n, 20, "max_nullity");
    std::size_t best = 0;
    std::vector<std::uint64_t> rows;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        rows.clear();
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i) & 1U) rows.push_back(g.row(i).low_word() & s);
        std::size_t rank = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r]) continue;
            ++rank;
            const std::uint64_t pivot = rows[r] & -rows[r];
            for (std::size_t q = r + 1; q < rows.size(); ++q)
                if (rows[q] & pivot) rows[q] ^= rows[r];
        }
        best = std::max(best, rows.size() - rank);
    }
    return best;
}

CheckReport check_par_rank(const Graph& g) {
    require_max_n(g.size(), kMaxParIhVars, "check_par_rank");
    Timer timer;
    CheckReport report = new_report("par-rank");
    const Rational par = par_ih(from_graph(g));
    expect_equal(report, digest(g), par.str(), Rational(std::int64_t{1} << max_nullity(g)).str());
    const auto mis = independence_number(g);
    const Rational floor(std::int64_t{1} << mis.alpha);
    ++report.instances;
    if (par < floor) report.failures.push_back({digest(g) + " alpha bound", par.str(), ">= " + floor.str()});
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_graph_state(const Graph& g) {
    require_max_n(g.size(), 12, "check_graph_state");
    Timer timer;
    CheckReport report = new_report("graph-state");
    const std::size_t n = g.size();
    const TruthTable t = from_graph(g);
    std::vector<std::int8_t> state(t.length());
    for (std::uint64_t x = 0; x < t.length(); ++x) state[x] = static_cast<std::int8_t>(t.sign(x));
    const std::string input = digest(g);
    std::vector<std::int8_t> image(state.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t z_support = g.row(i).low_word();
        const std::uint64_t flip = std::uint64_t{1} << i;
        // (X_i prod_j Z_j^{B_ij} psi)[x] = (-1)^{B_i . (x ^ e_i)} psi[x ^ e_i]
        for (std::uint64_t x = 0; x < state.size(); ++x) {
            const std::uint64_t source = x ^ flip;
            const int sign = parity(z_support & source) ? -1 : 1;
            image[x] = static_cast<std::int8_t>(sign * state[source]);
        }
        const std::size_t mismatches = static_cast<std::size_t>(
            std::count_if(image.begin(), image.end(), [&, x = std::size_t{0}](std::int8_t v) mutable {
                return v != state[x++];
            }));
        expect_equal(report, input + " generator=" + std::to_string(i + 1), std::to_string(mismatches), "0");
    }
    report.elapsed = timer.elapsed();
    return report;
}

CheckReport check_lattice_gap(const Graph& g) {
    require_max_n(g.size(), kMaxLatticeQubits, "check_lattice_gap");
    Timer timer;
    CheckReport report = new_report("lattice-gap");
    const auto code = GeneratorMatrix::from_graph(g);
    const Rational norm = lattice_min_norm(code, 1);
    const std::size_t db = min_distance(code, DistanceKind::binary, {}, SearchMode::exhaustive).value;
    const Rational expected = min(Rational(2), Rational(static_cast<std::int64_t>(db), 2));
    expect_equal(report, digest(g), norm.str(), expected.str());
    const Rational gap(static_cast<std::int64_t>(db), 4);
    report.notes.push_back(digest(g) + " d_b=" + std::to_string(db) + " gap=" + gap.str() +
                           (db > 4 ? " (heuristic: gap = d_b/4 is only established for d_b <= 4)" : ""));
    report.elapsed = timer.elapsed();
    return report;
}

TruthTable random_table(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    BitVec v(std::size_t{1} << n);
    for (auto& w : v.words()) w = rng.next();
    if (v.size() < 64) v.words()[0] &= (std::uint64_t{1} << v.size()) - 1;
    return TruthTable(n, std::move(v));
}

TruthTable random_quadratic(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const Graph g = random_graph(n, rng.next());
    const std::uint64_t linear = rng.next() & ((std::uint64_t{1} << n) - 1);
    const bool constant = rng.coin();
    const TruthTable base = from_graph(g);
    BitVec v(base.length());
    for (std::uint64_t x = 0; x < base.length(); ++x)
        v.set(x, base.value(x) ^ static_cast<bool>(parity(linear & x)) ^ constant);
    return TruthTable(n, std::move(v));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"wk",        "eq322",     "eq44",        "apc-d",      "epc-db",
                                                   "par-bound", "par-alpha", "par-rank",    "graph-state", "lattice-gap"};
    return names;
}

std::size_t suite_max_n(std::string_view name) {
    static const std::map<std::string, std::size_t, std::less<>> limits = {
        {"wk", 10},     {"eq322", 6},     {"eq44", 8},         {"apc-d", 12},       {"epc-db", 12},
        {"par-bound", 8}, {"par-alpha", 14}, {"par-rank", 14}, {"graph-state", 12}, {"lattice-gap", kMaxLatticeQubits}};
    auto it = limits.find(name);
    if (it == limits.end()) throw PreconditionError("unknown verification suite '" + std::string(name) + "'");
    return it->second;
}

namespace {

CheckReport run_instance(std::string_view name, std::size_t n, std::uint64_t seed) {
    if (name == "wk") return check_wk(random_table(n, seed));
    if (name == "eq322") {
        // alternate general and quadratic functions
        const TruthTable t = (seed & 1) ? random_quadratic(n, seed) : random_table(n, seed);
        return check_eq322(t, mix_seed(seed, 1));
    }
    if (name == "eq44") {
        const TruthTable t = (seed & 1) ? random_quadratic(n, seed) : random_table(n, seed);
        return check_eq44(t, mix_seed(seed, 1));
    }
    if (name == "apc-d") return check_apc_equals_d(random_graph(n, seed));
    if (name == "epc-db") return check_epc_equals_db(random_graph(n, seed));
    if (name == "par-bound") return check_par_bound(random_quadratic(n, seed));
    if (name == "par-alpha") return check_par_alpha(random_graph(n, seed));
    if (name == "par-rank") return check_par_rank(random_graph(n, seed));
    if (name == "graph-state") return check_graph_state(random_graph(n, seed));
    if (name == "lattice-gap") return check_lattice_gap(random_graph(n, seed));
    throw PreconditionError("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace

CheckReport run_suite(std::string_view name, const SuiteOptions& options) {
    if (name == "all") {
        CheckReport total = new_report("all", options.seed);
        for (const auto& suite : suite_names()) {
            SuiteOptions clamped = options;
            clamped.n = std::min(options.n, suite_max_n(suite));
            total.merge(run_suite(suite, clamped));
        }
        return total;
    }
    const std::size_t limit = suite_max_n(name);
    if (options.n < 1 || options.n > limit)
        throw LimitError("suite " + std::string(name) + " supports 1 <= n <= " + std::to_string(limit) + ", got n=" +
                         std::to_string(options.n));
    Timer timer;
    std::vector<CheckReport> parts(options.samples);
    parallel_for(options.samples, [&](std::size_t i) {
        parts[i] = run_instance(name, options.n, mix_seed(options.seed, i));
    });
    CheckReport report = new_report(std::string(name), options.seed);
    for (const auto& p : parts) {
        report.instances += p.instances;
        report.failures.insert(report.failures.end(), p.failures.begin(), p.failures.end());
        report.notes.insert(report.notes.end(), p.notes.begin(), p.notes.end());
    }
    report.elapsed = timer.elapsed();
    return report;
}

}  // namespace qnl::verify
