// qnl: construct graphs and codes, compute distances and spectra, run the
// identity checks and compare independence numbers against random graphs.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnl/boolean.hpp"
#include "qnl/errors.hpp"
#include "qnl/graph.hpp"
#include "qnl/io.hpp"
#include "qnl/parallel.hpp"
#include "qnl/stabilizer.hpp"
#include "qnl/verify.hpp"

namespace {

using namespace qnl;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const std::string& out_path, const std::string& contents) {
    if (out_path.empty()) {
        std::cout << contents;
    } else {
        io::write_file(out_path, contents);
    }
}

std::vector<bool> parse_row(const std::string& text, const char* flag) {
    std::vector<bool> row;
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            row.push_back(ch == '1');
        } else if (ch != ',' && ch != ' ') {
            throw FormatError(std::string(flag) + " takes a 0/1 string");
        }
    }
    return row;
}

std::vector<std::size_t> parse_perm(const std::string& text) {
    std::vector<std::size_t> images;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) images.push_back(std::stoul(item));
    return images;
}

std::string degree_profile(const Graph& g) {
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t v = 0; v < g.size(); ++v) ++counts[g.degree(v)];
    std::string out;
    for (auto [d, c] : counts) out += (out.empty() ? "" : " ") + std::to_string(d) + "x" + std::to_string(c);
    return out;
}

// ---- graph ---------------------------------------------------------------

struct GraphArgs {
    std::string out;
    std::string format = "text";
    std::size_t t = 3;
    std::size_t blocks = 0;
    std::string sigma = "paper-affine";
    std::vector<std::string> perms;
    std::string row;
    std::string a_row;
    std::string b_row;
    std::size_t n = 0;
    std::size_t degree = 0;
    std::uint64_t seed = 0;
};

int write_graph(const Graph& g, const GraphArgs& args) {
    std::string contents;
    if (args.format == "json") {
        contents = io::format_graph_json(g);
    } else if (args.format == "edges") {
        contents = io::format_edge_list(g);
    } else {
        contents = io::format_graph(g);
    }
    emit(args.out, contents);
    std::ostream& info = args.out.empty() ? std::cerr : std::cout;
    info << "n=" << g.size() << " edges=" << g.edge_count() << " degrees=" << degree_profile(g) << "\n";
    return kExitOk;
}

Graph build_nested(const GraphArgs& args) {
    NestedCliqueSpec spec;
    spec.t = args.t;
    spec.blocks = args.blocks;
    if (args.sigma == "paper-affine") {
        spec.rule = SigmaRule::paper_affine;
    } else if (args.sigma == "cyclic") {
        spec.rule = SigmaRule::cyclic;
    } else if (args.sigma == "identity") {
        spec.rule = SigmaRule::identity;
    } else {
        spec.rule = SigmaRule::explicit_list;
        for (const auto& p : args.perms) spec.sigmas.push_back(parse_perm(p));
    }
    return nested_clique(spec);
}

// ---- distance ------------------------------------------------------------

struct DistanceArgs {
    std::string input;
    std::string kind = "binary";
    std::size_t budget = 12;
    std::string mode = "auto";
    std::uint64_t max_candidates = 10'000'000'000ULL;
    double wall_clock = 0;
    std::string format = "text";
};

int run_correlation_distance(const io::Document& doc, const DistanceArgs& args) {
    TruthTable t = std::holds_alternative<TruthTable>(doc) ? std::get<TruthTable>(doc)
                   : std::holds_alternative<Graph>(doc)
                       ? from_graph(std::get<Graph>(doc))
                       : throw ModeError("apc/epc distances take a graph or a truth table");
    auto r = args.kind == "apc" ? apc_distance(t) : epc_distance(t);
    const std::string route = r.route == CorrelationRoute::quadratic ? "quadratic" : "generic";
    auto mask = [&](Mask m) { return BitVec::from_word(t.n(), m.bits).to_string(); };
    if (args.format == "json") {
        json j = {{"kind", args.kind}, {"value", r.value}, {"exact", true},
                  {"a", mask(r.a)},    {"b", mask(r.b)},   {"route", route}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << args.kind << " distance " << r.value << " (exact)\n"
                  << "a: " << mask(r.a) << "\nb: " << mask(r.b) << "\nroute: " << route << "\n";
    }
    return kExitOk;
}

int run_distance(const DistanceArgs& args) {
    io::Document doc = io::parse_any(io::read_file(args.input));
    if (args.kind == "apc" || args.kind == "epc") return run_correlation_distance(doc, args);
    if (std::holds_alternative<TruthTable>(doc)) {
        auto q = quadratic_form(std::get<TruthTable>(doc));
        if (!q) throw ModeError("hamming/binary distances need a code, a graph or a quadratic truth table");
        doc = q->b;
    }
    SearchBudget budget;
    budget.max_weight = args.budget;
    budget.max_candidates = args.max_candidates;
    budget.wall_clock_seconds = args.wall_clock;
    budget.progress = [](std::uint64_t candidates, std::size_t weight) {
        std::cerr << "progress: " << candidates << " candidates, weight class " << weight << "\n";
    };
    SearchMode mode = args.mode == "exhaustive" ? SearchMode::exhaustive
                      : args.mode == "bounded"  ? SearchMode::bounded
                                                : SearchMode::automatic;
    const DistanceKind kind = args.kind == "hamming" ? DistanceKind::hamming : DistanceKind::binary;
    DistanceResult r = std::holds_alternative<Graph>(doc)
                           ? min_distance(std::get<Graph>(doc), kind, budget, mode)
                           : min_distance(std::get<GeneratorMatrix>(doc), kind, budget, mode);

    const std::string searched = r.searched_weight < 0 ? "full" : std::to_string(r.searched_weight);
    if (args.format == "json") {
        json j = {{"kind", args.kind},         {"value", r.value},
                  {"exact", r.exact},          {"lower_bound", r.lower_bound},
                  {"searched_weight", searched}, {"candidates", r.candidates}};
        if (r.witness) {
            j["witness"] = gray_decode(*r.witness);
            j["coefficients"] = r.witness_coefficients->to_string();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (r.exact) {
            std::cout << args.kind << " distance " << r.value << " (exact)\n";
        } else {
            std::cout << args.kind << " distance >= " << r.lower_bound << ", best found " << r.value
                      << " (bound only)\n";
        }
        std::cout << "searched weight: " << searched << "\ncandidates: " << r.candidates << "\n";
        if (r.witness)
            std::cout << "witness: " << gray_decode(*r.witness)
                      << "\ncoefficients: " << r.witness_coefficients->to_string() << "\n";
    }
    return r.exact ? kExitOk : kExitBudget;
}

// ---- spectra -------------------------------------------------------------

TruthTable load_table(const std::string& path) {
    io::Document doc = io::parse_any(io::read_file(path));
    if (std::holds_alternative<TruthTable>(doc)) return std::get<TruthTable>(doc);
    if (std::holds_alternative<Graph>(doc)) return from_graph(std::get<Graph>(doc));
    auto b = std::get<GeneratorMatrix>(doc).as_bform_graph();
    if (!b) throw ModeError("spectra need a truth table, a graph or a (B | I) code");
    return from_graph(*b);
}

std::uint64_t parse_mask(const std::string& bits, std::size_t n, const char* flag) {
    if (bits.empty()) return 0;
    if (bits.size() != n) throw FormatError(std::string(flag) + " needs " + std::to_string(n) + " bits");
    return BitVec::from_string(bits).low_word();
}

// ---- alpha-compare -------------------------------------------------------

struct AlphaArgs {
    std::string graph;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::string name;
    std::uint64_t mis_nodes = 100'000'000ULL;
    std::string out;
};

int run_alpha_compare(const AlphaArgs& args) {
    const Graph g = io::parse_graph(io::read_file(args.graph));
    const long degree = g.regular_degree();
    if (degree <= 0) throw PreconditionError("alpha-compare needs a regular graph with positive degree");
    const std::size_t n = g.size();
    MisBudget budget{args.mis_nodes};

    std::string target = "timeout";
    try {
        target = std::to_string(independence_number(g, budget).alpha);
    } catch (const BudgetError& e) {
        target = "timeout>=" + std::to_string(e.best_bound());
    }

    // -1 marks a sample whose exact search ran out of budget
    std::vector<long> alphas(args.samples);
    parallel_for(args.samples, [&](std::size_t i) {
        const Graph r = random_regular(n, static_cast<std::size_t>(degree), mix_seed(args.seed, i));
        try {
            alphas[i] = static_cast<long>(independence_number(r, budget).alpha);
        } catch (const BudgetError&) {
            alphas[i] = -1;
        }
    });
    std::map<long, std::size_t> histogram;
    for (long a : alphas) ++histogram[a];

    const std::string name = args.name.empty() ? "graph" : args.name;
    const double d = static_cast<double>(degree);
    char reference[64];
    std::snprintf(reference, sizeof(reference), "%.3f", 2.0 * std::log(d) / d * static_cast<double>(n));
    std::string csv = "# reference (2 ln d / d) n = " + std::string(reference) + "\n";
    csv += "name,n,degree,alpha_target,alpha_value,count\n";
    for (auto [a, count] : histogram) {
        csv += name + "," + std::to_string(n) + "," + std::to_string(degree) + "," + target + "," +
               (a < 0 ? std::string("timeout") : std::to_string(a)) + "," + std::to_string(count) + "\n";
    }
    emit(args.out, csv);
    return kExitOk;
}

json report_json(const verify::CheckReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    json j = {{"name", r.name},
              {"instances", r.instances},
              {"failures", failures},
              {"elapsed_ms", r.elapsed.count()}};
    if (r.seed) j["seed"] = *r.seed;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stabilizer codes, graphs and boolean functions"};
    app.require_subcommand(1);

    // graph
    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "Build a graph and write it as a file");
    graph->require_subcommand(1);
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", graph_args.out, "Output path (stdout when omitted)");
        cmd->add_option("--format", graph_args.format, "text, json or edges")
            ->check(CLI::IsMember({"text", "json", "edges"}));
    };
    auto* g_clique = graph->add_subcommand("clique", "Complete graph K_t");
    g_clique->add_option("--t", graph_args.t)->required();
    add_output(g_clique);
    auto* g_nested = graph->add_subcommand("nested-clique", "Nested clique graph");
    g_nested->add_option("--t", graph_args.t)->required();
    g_nested->add_option("--blocks", graph_args.blocks, "Number of blocks (default t)");
    g_nested->add_option("--sigma", graph_args.sigma, "paper-affine, cyclic, identity or explicit")
        ->check(CLI::IsMember({"paper-affine", "cyclic", "identity", "explicit"}));
    g_nested->add_option("--perm", graph_args.perms, "Explicit permutation as 1-based images, e.g. 2,3,1");
    add_output(g_nested);
    auto* g_circ = graph->add_subcommand("circulant", "Circulant graph");
    g_circ->add_option("--row", graph_args.row, "First row as a 0/1 string")->required();
    add_output(g_circ);
    auto* g_two = graph->add_subcommand("two-circulant", "[[A, B], [B^T, A]] from two circulants");
    g_two->add_option("--a-row", graph_args.a_row)->required();
    g_two->add_option("--b-row", graph_args.b_row)->required();
    add_output(g_two);
    auto* g_rr = graph->add_subcommand("random-regular", "Seeded random regular graph");
    g_rr->add_option("--n", graph_args.n)->required();
    g_rr->add_option("--degree", graph_args.degree)->required();
    g_rr->add_option("--seed", graph_args.seed);
    add_output(g_rr);

    // code
    std::string code_input;
    std::string code_out;
    std::string code_format = "text";
    auto* code = app.add_subcommand("code", "Code conversion and B-form reduction");
    code->require_subcommand(1);
    auto* c_bform = code->add_subcommand("bform", "Reduce a real self-dual code to (B | I)");
    c_bform->add_option("input", code_input)->required();
    c_bform->add_option("--out", code_out);
    c_bform->add_option("--format", code_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    auto* c_convert = code->add_subcommand("convert", "Rewrite a code (or a graph as (B | I))");
    c_convert->add_option("input", code_input)->required();
    c_convert->add_option("--out", code_out);
    c_convert->add_option("--format", code_format, "text, gf4 or json")
        ->check(CLI::IsMember({"text", "gf4", "json"}));

    // distance
    DistanceArgs dist_args;
    auto* distance = app.add_subcommand("distance", "Minimum distance of a code, graph or truth table");
    distance->add_option("input", dist_args.input)->required();
    distance->add_option("--kind", dist_args.kind)->check(CLI::IsMember({"hamming", "binary", "apc", "epc"}));
    distance->add_option("--budget", dist_args.budget, "Largest weight class of the bounded search");
    distance->add_option("--mode", dist_args.mode)->check(CLI::IsMember({"auto", "exhaustive", "bounded"}));
    distance->add_option("--max-candidates", dist_args.max_candidates);
    distance->add_option("--wall-clock", dist_args.wall_clock, "Seconds; checked between weight classes");
    distance->add_option("--format", dist_args.format)->check(CLI::IsMember({"text", "json"}));

    // spectra
    std::string spec_input;
    std::string spec_mu;
    std::string spec_c;
    std::string spec_set = "ihn";
    auto* spectra = app.add_subcommand("spectra", "Spectral dumps");
    spectra->require_subcommand(1);
    auto* s_wht = spectra->add_subcommand("wht", "Walsh-Hadamard spectrum as CSV");
    s_wht->add_option("input", spec_input)->required();
    auto* s_ihn = spectra->add_subcommand("ihn", "{I,H,N}^n transform as CSV");
    s_ihn->add_option("input", spec_input)->required();
    s_ihn->add_option("--mu", spec_mu, "Identity positions as an n-bit string");
    s_ihn->add_option("--c", spec_c, "Nega-Hadamard positions as an n-bit string");
    auto* s_par = spectra->add_subcommand("par", "Peak-to-average ratio");
    s_par->add_option("input", spec_input)->required();
    s_par->add_option("--set", spec_set, "ih or ihn")->check(CLI::IsMember({"ih", "ihn"}));

    // verify
    std::string suite;
    verify::SuiteOptions suite_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity check suite");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--n", suite_opts.n);
    verify_cmd->add_option("--samples", suite_opts.samples);
    verify_cmd->add_option("--seed", suite_opts.seed);

    // alpha-compare
    AlphaArgs alpha_args;
    auto* alpha = app.add_subcommand("alpha-compare", "Independence number against random regular graphs");
    alpha->add_option("--graph", alpha_args.graph)->required();
    alpha->add_option("--samples", alpha_args.samples);
    alpha->add_option("--seed", alpha_args.seed);
    alpha->add_option("--name", alpha_args.name);
    alpha->add_option("--mis-nodes", alpha_args.mis_nodes, "Search-node budget per graph");
    alpha->add_option("--out", alpha_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code_from_cli = app.exit(e);
        return code_from_cli == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (graph->parsed()) {
            if (g_clique->parsed()) return write_graph(clique(graph_args.t), graph_args);
            if (g_nested->parsed()) return write_graph(build_nested(graph_args), graph_args);
            if (g_circ->parsed()) return write_graph(circulant(parse_row(graph_args.row, "--row")), graph_args);
            if (g_two->parsed())
                return write_graph(
                    two_circulant(parse_row(graph_args.a_row, "--a-row"), parse_row(graph_args.b_row, "--b-row")),
                    graph_args);
            return write_graph(random_regular(graph_args.n, graph_args.degree, graph_args.seed), graph_args);
        }
        if (code->parsed()) {
            io::Document doc = io::parse_any(io::read_file(code_input));
            GeneratorMatrix g = std::holds_alternative<Graph>(doc)
                                    ? GeneratorMatrix::from_graph(std::get<Graph>(doc))
                                    : std::holds_alternative<GeneratorMatrix>(doc)
                                          ? std::get<GeneratorMatrix>(doc)
                                          : throw ModeError("code commands take a code or a graph");
            if (c_bform->parsed()) {
                BFormCode b = bform_reduce(g);
                if (code_format == "json") {
                    json j = json::parse(io::format_graph_json(b.b));
                    json log = json::array();
                    for (const auto& step : b.log) log.push_back(to_string(step));
                    j["log"] = log;
                    emit(code_out, j.dump(2) + "\n");
                } else {
                    std::string text;
                    for (const auto& step : b.log) text += "# " + to_string(step) + "\n";
                    emit(code_out, text + io::format_graph(b.b));
                }
                return kExitOk;
            }
            emit(code_out, code_format == "json"  ? io::format_code_json(g)
                           : code_format == "gf4" ? io::format_code_gf4(g)
                                                  : io::format_code(g));
            return kExitOk;
        }
        if (distance->parsed()) return run_distance(dist_args);
        if (spectra->parsed()) {
            TruthTable t = load_table(spec_input);
            if (s_wht->parsed()) {
                std::cout << io::spectrum_csv(t.n(), wht(t));
            } else if (s_ihn->parsed()) {
                const Mask mu{parse_mask(spec_mu, t.n(), "--mu")};
                const Mask c{parse_mask(spec_c, t.n(), "--c")};
                std::cout << io::spectrum_csv(t.n(), ihn_transform(t, mu, c));
            } else {
                std::cout << "par_" << spec_set << " " << (spec_set == "ih" ? par_ih(t) : par_ihn(t)) << "\n";
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const auto& names = verify::suite_names();
            if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
                std::cerr << "unknown suite '" << suite << "'; choose one of all";
                for (const auto& s : names) std::cerr << ", " << s;
                std::cerr << "\n";
                return kExitUsage;
            }
            verify::CheckReport report = verify::run_suite(suite, suite_opts);
            std::cout << report_json(report).dump(2) << "\n";
            return report.passed() ? kExitOk : kExitCheckFailed;
        }
        if (alpha->parsed()) return run_alpha_compare(alpha_args);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << " (best bound " << e.best_bound() << ")\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: malformed number: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
