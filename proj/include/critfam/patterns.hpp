#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critfam/graph.hpp"
#include "critfam/isomorphism.hpp"

namespace critfam {

/// A small named graph H used in H-freeness queries.
struct Pattern {
  std::string name;
  Graph graph;
};

class UnknownPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "Pt", "Ct", "Kt" (decimal t), "2K2" (alias "2P2") and "K3+P1".
/// Paths and cliques need t >= 1, cycles t >= 3; t is capped at 16.
Pattern make_pattern(std::string_view name);

/// Splits a comma-separated list of pattern tokens.
std::vector<Pattern> parse_patterns(std::string_view list);

/// Exact induced-subgraph search. phi[i] is the vertex of g playing
/// pattern vertex i; nullopt means g is H-free.
std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h);
inline std::optional<VertexMap> contains_induced(const Graph& g, const Pattern& h) {
  return contains_induced(g, h.graph);
}

struct FreenessVerdict {
  std::string pattern;
  bool free = true;
  std::optional<VertexMap> witness;  // present iff !free
};

std::vector<FreenessVerdict> freeness_report(const Graph& g, std::span<const Pattern> patterns);

/// Re-checks a witness independently: distinct in-range vertices whose
/// induced subgraph is isomorphic to h via the given map.
bool witness_holds(const Graph& g, const Graph& h, std::span<const Vertex> phi);

}  // namespace critfam
