#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "critfam/graph.hpp"

namespace critfam {

/// Bijection phi stored as phi[v] for v in the source graph.
using VertexMap = std::vector<Vertex>;

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kIsomorphismMaxOrder = 64;

/// Backtracking isomorphism search for small graphs. Returns phi with
/// u~v in g iff phi(u)~phi(v) in h, or nullopt. Throws TooLarge past 64
/// vertices instead of guessing.
std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h);

/// True iff phi is a bijection of 0..n-1 that preserves adjacency and
/// non-adjacency between g and h. Throws GraphError if phi is not a
/// bijection onto h's vertices.
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> phi);

}  // namespace critfam
