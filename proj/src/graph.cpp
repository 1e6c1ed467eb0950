#include "critfam/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace critfam {

std::size_t bits::count(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

Graph::Graph(std::size_t n) : n_(n), words_(bits::words_for(n)), rows_(n * words_, 0) {}

void Graph::link(Vertex u, Vertex v) {
  bits::set({rows_.data() + u * words_, words_}, v);
  bits::set({rows_.data() + v * words_, words_}, u);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) {
    if (e.first >= n || e.second >= n)
      throw GraphError("edge " + describe(e) + " has an endpoint outside 0.." +
                       (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
    if (e.first == e.second) throw GraphError("edge " + describe(e) + " is a self-loop");
    g.link(e.first, e.second);
  }
  return g;
}

std::size_t Graph::size() const { return bits::count(rows_) / 2; }

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  auto r = row(v);
  for (Vertex u = 0; u < n_; ++u)
    if (bits::test(r, u)) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.n_);
  for (Vertex u = 0; u < g.n_; ++u)
    for (Vertex v = u + 1; v < g.n_; ++v)
      if (!g.adjacent(u, v)) out.link(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.n_ + h.n_);
  for (const auto& [u, v] : g.edges()) out.link(u, v);
  for (const auto& [u, v] : h.edges()) out.link(u + g.n_, v + g.n_);
  return out;
}

VertexSet normalize_set(const Graph& g, std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= g.order())
    throw GraphError("vertex " + std::to_string(out.back()) + " out of range for graph on " +
                     std::to_string(g.order()) + " vertices");
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const VertexSet members = normalize_set(g, s);
  Graph out(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) out.link(i, j);
  return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  VertexSet rest;
  rest.reserve(g.order() - 1);
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) rest.push_back(u);
  return induced_subgraph(g, rest);
}

bool is_stable_set(const Graph& g, std::span<const Vertex> s) {
  const VertexSet members = normalize_set(g, s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) return false;
  return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  const VertexSet members = normalize_set(g, s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j])) return false;
  return true;
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

}  // namespace critfam
