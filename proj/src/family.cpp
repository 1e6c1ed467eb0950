#include "critfam/family.hpp"

#include <algorithm>
#include <string>

namespace critfam {

FamilyParams::FamilyParams(long long q, long long k) {
  if (q < 1) throw InvalidParams("q must be ≥ 1 (got " + std::to_string(q) + ")");
  if (k < 3) throw InvalidParams("k must be ≥ 3 (got " + std::to_string(k) + ")");
  q_ = static_cast<std::size_t>(q);
  k_ = static_cast<std::size_t>(k);
}

std::vector<Vertex> formula_neighbourhood(const FamilyParams& p, Vertex i) {
  const std::size_t n = p.order();
  if (i >= n) throw GraphError("vertex " + std::to_string(i) + " out of range for G(q,k) on " + std::to_string(n));
  std::vector<Vertex> out;
  out.reserve(2 + p.q() * (p.k() - 2));
  out.push_back((i + n - 1) % n);
  out.push_back((i + 1) % n);
  for (std::size_t j = 0; j < p.q(); ++j)
    for (std::size_t m = 2; m <= p.k() - 1; ++m) out.push_back((i + p.k() * j + m) % n);
  return out;
}

Graph build_family(const FamilyParams& p) {
  const std::size_t n = p.order();
  std::vector<VertexSet> nbhd(n);
  for (Vertex i = 0; i < n; ++i) {
    auto raw = formula_neighbourhood(p, i);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    nbhd[i] = std::move(raw);
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : nbhd[i]) {
      if (j == i) throw std::logic_error("neighbourhood rule produced a loop at v_" + std::to_string(i));
      if (!std::binary_search(nbhd[j].begin(), nbhd[j].end(), i))
        throw std::logic_error("neighbourhood rule is not symmetric: v_" + std::to_string(j) + " in N(v_" +
                               std::to_string(i) + ") but not conversely");
      if (i < j) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<VertexSet> partition_classes(const FamilyParams& p) {
  std::vector<VertexSet> classes(p.k());
  for (Vertex t = 0; t < p.order(); ++t) classes[t % p.k()].push_back(t);
  return classes;
}

Coloring canonical_coloring(const FamilyParams& p) {
  const std::size_t last = p.q() * p.k();
  Coloring c;
  c.palette_size = p.k() + 1;
  c.colors.resize(p.order());
  for (Vertex j = 0; j < last; ++j) c.colors[j] = static_cast<Color>(j % p.k());
  c.colors[last] = static_cast<Color>(p.k());
  if (!verify_coloring(build_family(p), c))
    throw std::logic_error("canonical coloring is improper on G(" + std::to_string(p.q()) + "," +
                           std::to_string(p.k()) + ")");
  return c;
}

VertexSet window(const FamilyParams& p, std::size_t start) {
  VertexSet w;
  for (std::size_t j = 0; j < p.k(); ++j) w.push_back((start + j) % p.order());
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<Vertex> rotation(const FamilyParams& p, std::size_t shift) {
  std::vector<Vertex> perm(p.order());
  for (Vertex i = 0; i < p.order(); ++i) perm[i] = (i + shift) % p.order();
  return perm;
}

bool is_automorphism(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n)
    throw GraphError("permutation has " + std::to_string(perm.size()) + " entries for " + std::to_string(n) +
                     " vertices");
  std::vector<bool> hit(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (perm[v] >= n || hit[perm[v]])
      throw GraphError("not a bijection: " + std::to_string(v) + " -> " + std::to_string(perm[v]));
    hit[perm[v]] = true;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace critfam
