#include "qnl/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qnl/errors.hpp"

namespace qnl::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> content_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        if (!line.empty() && line.front() != '#') lines.push_back(line);
        if (eol == std::string_view::npos) break;
        text.remove_prefix(eol + 1);
    }
    return lines;
}

bool looks_like_json(std::string_view text) {
    text = trim(text);
    return !text.empty() && text.front() == '{';
}

std::size_t parse_size(std::string_view s, std::string_view what) {
    s = trim(s);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw FormatError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    return value;
}

// Parses "key=<int>" tokens of a header line.
std::size_t header_value(std::string_view line, std::string_view key, bool required = true) {
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        std::string_view token = line.substr(pos, end - pos);
        if (token.size() > key.size() && token.substr(0, key.size()) == key && token[key.size()] == '=')
            return parse_size(token.substr(key.size() + 1), key);
        pos = end;
    }
    if (required) throw FormatError("header line '" + std::string(line) + "' lacks " + std::string(key) + "=<int>");
    return static_cast<std::size_t>(-1);
}

bool is_header(std::string_view line) { return line.size() > 2 && line.substr(0, 2) == "n="; }

bool only_chars(std::string_view s, std::string_view allowed) {
    return !s.empty() && s.find_first_not_of(allowed) == std::string_view::npos;
}

BitVec parse_bits(std::string_view s, std::size_t n, const std::string& where) {
    if (s.size() != n)
        throw FormatError(where + ": expected " + std::to_string(n) + " bits, got " + std::to_string(s.size()));
    if (!only_chars(s, "01")) throw FormatError(where + ": bits must be 0 or 1");
    return BitVec::from_string(s);
}

PauliVector parse_code_row(std::string_view line, std::size_t n, std::size_t index) {
    const std::string where = "code row " + std::to_string(index + 1);
    auto bar = line.find('|');
    if (bar != std::string_view::npos)
        return PauliVector(parse_bits(trim(line.substr(0, bar)), n, where + " alpha"),
                           parse_bits(trim(line.substr(bar + 1)), n, where + " beta"));
    if (line.size() != n)
        throw FormatError(where + ": expected " + std::to_string(n) + " GF(4) symbols, got " +
                          std::to_string(line.size()));
    return gray_encode(line);
}

GeneratorMatrix code_from_json(const json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (j.contains("k") && j.at("k").get<std::size_t>() != rows.size())
        throw FormatError("code JSON: k does not match the number of rows");
    std::vector<PauliVector> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "code row " + std::to_string(i + 1);
        out.emplace_back(parse_bits(rows[i].at("alpha").get<std::string>(), n, where + " alpha"),
                         parse_bits(rows[i].at("beta").get<std::string>(), n, where + " beta"));
    }
    return GeneratorMatrix(n, std::move(out));
}

Graph graph_from_json(const json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (rows.size() != n) throw FormatError("graph JSON: expected " + std::to_string(n) + " rows");
    std::vector<BitVec> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(parse_bits(rows[i].get<std::string>(), n, "graph row " + std::to_string(i + 1)));
    return Graph::from_rows(std::move(out));
}

TruthTable table_from_json(const json& j) {
    return TruthTable::from_signs(j.at("n").get<std::size_t>(), j.at("signs").get<std::string>());
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

template <typename F>
auto with_json_errors(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed JSON document: ") + e.what());
    }
}

Graph parse_edge_list(const std::vector<std::string_view>& lines) {
    std::size_t first = 0;
    std::size_t n = 0;
    bool sized = false;
    if (!lines.empty() && is_header(lines[0])) {
        n = header_value(lines[0], "n");
        sized = true;
        first = 1;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = first; i < lines.size(); ++i) {
        std::istringstream in{std::string(lines[i])};
        std::string a, b, extra;
        if (!(in >> a >> b) || (in >> extra))
            throw FormatError("edge line " + std::to_string(i + 1) + ": expected 'u v'");
        const std::size_t u = parse_size(a, "vertex");
        const std::size_t v = parse_size(b, "vertex");
        if (u == 0 || v == 0) throw FormatError("edge line " + std::to_string(i + 1) + ": vertices are 1-indexed");
        if (!sized) n = std::max({n, u, v});
        if (u > n || v > n)
            throw FormatError("edge line " + std::to_string(i + 1) + ": vertex exceeds n=" + std::to_string(n));
        edges.emplace_back(u - 1, v - 1);
    }
    if (n == 0) throw FormatError("empty edge list");
    return Graph::from_edges(n, edges);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << contents;
}

GeneratorMatrix parse_code(std::string_view text) {
    if (looks_like_json(text)) return with_json_errors([&] { return code_from_json(parse_json(text)); });
    auto lines = content_lines(text);
    if (lines.empty()) throw FormatError("empty code file");
    const std::size_t n = header_value(lines[0], "n");
    const std::size_t k = header_value(lines[0], "k");
    if (lines.size() - 1 != k)
        throw FormatError("code file declares k=" + std::to_string(k) + " but has " +
                          std::to_string(lines.size() - 1) + " rows");
    std::vector<PauliVector> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(parse_code_row(lines[i + 1], n, i));
    return GeneratorMatrix(n, std::move(rows));
}

Graph parse_graph(std::string_view text) {
    if (looks_like_json(text)) return with_json_errors([&] { return graph_from_json(parse_json(text)); });
    auto lines = content_lines(text);
    if (lines.empty()) throw FormatError("empty graph file");
    if (is_header(lines[0]) && lines.size() > 1 && only_chars(lines[1], "01")) {
        const std::size_t n = header_value(lines[0], "n");
        if (lines.size() - 1 != n)
            throw FormatError("graph file declares n=" + std::to_string(n) + " but has " +
                              std::to_string(lines.size() - 1) + " rows");
        std::vector<BitVec> rows;
        for (std::size_t i = 0; i < n; ++i)
            rows.push_back(parse_bits(lines[i + 1], n, "graph row " + std::to_string(i + 1)));
        return Graph::from_rows(std::move(rows));
    }
    return parse_edge_list(lines);
}

TruthTable parse_table(std::string_view text) {
    if (looks_like_json(text)) return with_json_errors([&] { return table_from_json(parse_json(text)); });
    auto lines = content_lines(text);
    if (lines.size() != 2) throw FormatError("truth table file needs a header and one line of signs");
    return TruthTable::from_signs(header_value(lines[0], "n"), std::string(lines[1]));
}

Document parse_any(std::string_view text) {
    if (looks_like_json(text)) {
        json j = parse_json(text);
        return with_json_errors([&]() -> Document {
            if (j.contains("signs")) return table_from_json(j);
            if (j.contains("rows") && !j.at("rows").empty() && j.at("rows")[0].is_object()) return code_from_json(j);
            if (j.contains("k")) return code_from_json(j);
            if (j.contains("rows")) return graph_from_json(j);
            throw FormatError("JSON document is neither a code, a graph nor a truth table");
        });
    }
    auto lines = content_lines(text);
    if (lines.empty()) throw FormatError("empty input");
    if (is_header(lines[0])) {
        if (header_value(lines[0], "k", false) != static_cast<std::size_t>(-1)) return parse_code(text);
        if (lines.size() == 2 && only_chars(lines[1], "+-")) return parse_table(text);
    }
    return parse_graph(text);
}

std::string format_code(const GeneratorMatrix& g) {
    std::string out = "n=" + std::to_string(g.n()) + " k=" + std::to_string(g.k()) + "\n";
    for (const auto& row : g.rows()) out += row.alpha.to_string() + "|" + row.beta.to_string() + "\n";
    return out;
}

std::string format_code_gf4(const GeneratorMatrix& g) {
    std::string out = "n=" + std::to_string(g.n()) + " k=" + std::to_string(g.k()) + "\n";
    for (const auto& row : g.rows()) out += gray_decode(row) + "\n";
    return out;
}

std::string format_code_json(const GeneratorMatrix& g) {
    json rows = json::array();
    for (const auto& row : g.rows()) rows.push_back({{"alpha", row.alpha.to_string()}, {"beta", row.beta.to_string()}});
    json j = {{"n", g.n()}, {"k", g.k()}, {"rows", rows}};
    return j.dump(2) + "\n";
}

std::string format_graph(const Graph& g) {
    std::string out = "n=" + std::to_string(g.size()) + "\n";
    for (const auto& row : g.rows()) out += row.to_string() + "\n";
    return out;
}

std::string format_graph_json(const Graph& g) {
    json rows = json::array();
    for (const auto& row : g.rows()) rows.push_back(row.to_string());
    json j = {{"n", g.size()}, {"rows", rows}};
    return j.dump(2) + "\n";
}

std::string format_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

std::string format_table(const TruthTable& t) { return "n=" + std::to_string(t.n()) + "\n" + t.to_signs() + "\n"; }

std::string format_table_json(const TruthTable& t) {
    json j = {{"n", t.n()}, {"signs", t.to_signs()}};
    return j.dump(2) + "\n";
}

namespace {

std::string mask_string(std::size_t n, std::uint64_t mask) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) s[i] = '1';
    return s;
}

}  // namespace

std::string spectrum_csv(std::size_t n, const std::vector<GaussianInt>& values) {
    std::string out = "mask,re,im,norm2\n";
    for (std::uint64_t y = 0; y < values.size(); ++y)
        out += mask_string(n, y) + "," + std::to_string(values[y].re) + "," + std::to_string(values[y].im) + "," +
               std::to_string(values[y].norm2()) + "\n";
    return out;
}

std::string spectrum_csv(std::size_t n, const std::vector<std::int64_t>& values) {
    std::vector<GaussianInt> complex(values.begin(), values.end());
    return spectrum_csv(n, complex);
}

}  // namespace qnl::io
