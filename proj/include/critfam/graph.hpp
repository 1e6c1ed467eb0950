#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critfam {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Raised when a caller hands the graph layer something structurally invalid
/// (out-of-range index, self-loop, bad permutation).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set(std::span<Word> row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}
std::size_t count(std::span<const Word> row);

}  // namespace bits

/// Simple undirected graph on vertices 0..n-1 with one bit-packed adjacency
/// row per vertex. Immutable once built; every constructor keeps the rows
/// symmetric and loop-free.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Duplicates (in either orientation)
  /// collapse; self-loops and out-of-range endpoints throw GraphError naming
  /// the offending pair.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const;  // edge count
  bool empty() const { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const {
    return bits::test(row(u), v);
  }
  std::span<const bits::Word> row(Vertex v) const {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  std::size_t degree(Vertex v) const { return bits::count(row(v)); }
  std::vector<std::size_t> degrees() const;
  VertexSet neighbors(Vertex v) const;
  /// Edges as (u, v) pairs with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void link(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<bits::Word> rows_;

  friend Graph complement(const Graph& g);
  friend Graph disjoint_union(const Graph& g, const Graph& h);
  friend Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
};

Graph complement(const Graph& g);
/// Vertices of h are shifted by g.order(); no edges cross.
Graph disjoint_union(const Graph& g, const Graph& h);
/// G[S], relabelled so that the i-th smallest member of s becomes vertex i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
/// G - v, relabelled the same way as induced_subgraph.
Graph delete_vertex(const Graph& g, Vertex v);
bool is_stable_set(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);

/// Sorts, deduplicates and range-checks a set of vertices against g.
VertexSet normalize_set(const Graph& g, std::span<const Vertex> s);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

std::string describe(const Edge& e);

}  // namespace critfam
