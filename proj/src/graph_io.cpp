#include "critfam/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

namespace critfam {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kGraph6Bias = 63;

std::size_t graph6_data_bytes(std::size_t n) {
  const std::size_t pairs = n * (n == 0 ? 0 : n - 1) / 2;
  return (pairs + 5) / 6;
}

// Reads the next line that is not blank, counting lines as we go.
bool next_content_line(std::istream& is, std::string& line, std::size_t& lineno) {
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

std::vector<long long> integers(const std::string& s, std::size_t lineno) {
  std::istringstream in(s);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'", lineno);
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", lineno);
    out.push_back(v);
  }
  return out;
}

Graph finish(std::size_t n, const std::vector<Edge>& edges, std::size_t lineno) {
  try {
    return Graph::from_edges(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what(), lineno);
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw UnsupportedSize("graph6 short form supports at most 62 vertices, got " + std::to_string(n));
  std::string out;
  out.reserve(1 + graph6_data_bytes(n));
  out.push_back(static_cast<char>(kGraph6Bias + n));

  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kGraph6Bias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kGraph6Bias + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("byte " + std::to_string(c) + " outside the graph6 range 63..126", base + i);
  }
  const std::size_t n = static_cast<unsigned char>(text[0]) - kGraph6Bias;
  if (n > kGraph6MaxOrder) throw ParseError("long-form graph6 sizes are not supported", base);

  const std::size_t expected = 1 + graph6_data_bytes(n);
  if (text.size() != expected)
    throw ParseError("graph6 string for n=" + std::to_string(n) + " must be " + std::to_string(expected) +
                         " bytes, got " + std::to_string(text.size()),
                     base + std::min(text.size(), expected));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int group = static_cast<unsigned char>(text[1 + bit / 6]) - kGraph6Bias;
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t pos = 1 + bit / 6;
    const int group = static_cast<unsigned char>(text[pos]) - kGraph6Bias;
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (group & pad_mask) throw ParseError("nonzero padding bits", base + pos);
  }
  return Graph::from_edges(n, edges);
}

GraphFormat parse_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::graph6;
  if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
  if (name == "edges") return GraphFormat::edges;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "' (expected g6, dimacs or edges)");
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6:
      return "g6";
    case GraphFormat::dimacs:
      return "dimacs";
    case GraphFormat::edges:
      return "edges";
  }
  return "?";
}

void write_edge_list(std::ostream& os, const Graph& g) {
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(is, line, lineno)) throw ParseError("missing 'n m' header", lineno);
  const auto header = integers(line, lineno);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw ParseError("header must be two non-negative integers 'n m'", lineno);
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);

  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    if (!next_content_line(is, line, lineno))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), lineno);
    const auto uv = integers(line, lineno);
    if (uv.size() != 2 || uv[0] < 0 || uv[1] < 0) throw ParseError("edge line must be 'u v'", lineno);
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  if (next_content_line(is, line, lineno)) throw ParseError("trailing content after the last edge", lineno);
  return finish(n, edges, lineno);
}

void write_dimacs(std::ostream& os, const Graph& g, std::string_view comment) {
  const auto edges = g.edges();
  if (!comment.empty()) os << "c " << comment << '\n';
  os << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  while (next_content_line(is, line, lineno)) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError("duplicate 'p' line", lineno);
      std::string kind;
      long long nn = -1;
      long long mm = -1;
      if (!(in >> kind >> nn >> mm) || (kind != "edge" && kind != "col") || nn < 0 || mm < 0)
        throw ParseError("malformed problem line, expected 'p edge n m'", lineno);
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError("edge before 'p' line", lineno);
      long long u = 0;
      long long v = 0;
      std::string extra;
      if (!(in >> u >> v) || (in >> extra)) throw ParseError("malformed edge line, expected 'e u v'", lineno);
      if (u < 1 || v < 1) throw ParseError("DIMACS vertices are 1-indexed", lineno);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError("unknown line type '" + tag + "'", lineno);
    }
  }
  if (!have_header) throw ParseError("missing 'p edge n m' line", lineno);
  Graph g = finish(n, edges, lineno);
  // Some generators list each edge in both directions, so m is checked
  // against the raw line count or the deduplicated count.
  if (edges.size() != m && g.size() != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                     lineno);
  return g;
}

void write_graph(std::ostream& os, const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6:
      os << encode_graph6(g) << '\n';
      break;
    case GraphFormat::dimacs:
      write_dimacs(os, g);
      break;
    case GraphFormat::edges:
      write_edge_list(os, g);
      break;
  }
}

Graph read_graph(std::istream& is, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: {
      std::string line;
      std::size_t lineno = 0;
      if (!next_content_line(is, line, lineno)) throw ParseError("no graph6 line found", 0);
      return decode_graph6(line);
    }
    case GraphFormat::dimacs:
      return read_dimacs(is);
    case GraphFormat::edges:
      return read_edge_list(is);
  }
  throw std::logic_error("unhandled graph format");
}

Graph read_graph_auto(std::istream& is) {
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  std::istringstream probe(text);
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(probe, line, lineno)) throw ParseError("empty input", 0);

  std::istringstream in(text);
  // 'c' and 'p' are also legal graph6 size bytes, so DIMACS is recognised
  // by the tag standing alone as a token.
  std::string tag;
  std::istringstream(line) >> tag;
  if (tag == "c" || tag == "p") return read_dimacs(in);
  if (tag.front() >= '0' && tag.front() <= '9') return read_edge_list(in);
  return read_graph(in, GraphFormat::graph6);
}

}  // namespace critfam
