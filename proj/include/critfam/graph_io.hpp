#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "critfam/graph.hpp"

namespace critfam {

/// Malformed input text. offset() is the byte (graph6) or line number
/// (edge list / DIMACS) where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Only the short graph6 form (n <= 62) is handled.
class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

std::string encode_graph6(const Graph& g);
/// Accepts one graph6 line without terminator; a leading ">>graph6<<"
/// header is stripped. Anything after the last data byte is an error.
Graph decode_graph6(std::string_view text);

enum class GraphFormat { graph6, dimacs, edges };

GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat f);

/// "n m" header, then one "u v" line per edge (0-indexed, u < v).
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

/// DIMACS .col: "c" comments, "p edge n m", "e u v" lines, 1-indexed.
void write_dimacs(std::ostream& os, const Graph& g, std::string_view comment = {});
Graph read_dimacs(std::istream& is);

void write_graph(std::ostream& os, const Graph& g, GraphFormat f);
Graph read_graph(std::istream& is, GraphFormat f);
/// Sniffs the format: "p"/"c" lines mean DIMACS, a two-integer header
/// means edge list, anything else is parsed as graph6.
Graph read_graph_auto(std::istream& is);

}  // namespace critfam
