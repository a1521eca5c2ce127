#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qnl/boolean.hpp"
#include "qnl/graph.hpp"
#include "qnl/stabilizer.hpp"

namespace qnl::io {

// Text formats (qubit / vertex 1 leftmost):
//   code   "n=<int> k=<int>" then k lines "<alpha>|<beta>" or k GF(4) lines
//   graph  "n=<int>" then n rows of 0/1
//   edges  optional "n=<int>", then "u v" pairs, 1-indexed
//   table  "n=<int>" then one line of 2^n '+'/'-'
// JSON mirrors: {n, k, rows:[{alpha, beta}]}, {n, rows:[...]}, {n, signs}.
// Blank lines and lines starting with '#' are ignored.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

GeneratorMatrix parse_code(std::string_view text);
Graph parse_graph(std::string_view text);
TruthTable parse_table(std::string_view text);

using Document = std::variant<GeneratorMatrix, Graph, TruthTable>;

/// Detects the format from the content; throws FormatError when nothing fits.
Document parse_any(std::string_view text);

std::string format_code(const GeneratorMatrix& g);
std::string format_code_gf4(const GeneratorMatrix& g);
std::string format_code_json(const GeneratorMatrix& g);

std::string format_graph(const Graph& g);
std::string format_graph_json(const Graph& g);
std::string format_edge_list(const Graph& g);

std::string format_table(const TruthTable& t);
std::string format_table_json(const TruthTable& t);

/// "mask,re,im,norm2" rows; mask written as an n-bit string, variable 1 leftmost.
std::string spectrum_csv(std::size_t n, const std::vector<GaussianInt>& values);
std::string spectrum_csv(std::size_t n, const std::vector<std::int64_t>& values);

}  // namespace qnl::io
