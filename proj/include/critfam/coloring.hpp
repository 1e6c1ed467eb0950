#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "critfam/graph.hpp"

namespace critfam {

using Color = int;
inline constexpr Color kUncolored = -1;

/// Vertex -> color assignment over a palette {0, ..., palette_size-1}.
struct Coloring {
  std::vector<Color> colors;
  std::size_t palette_size = 0;

  /// Number of distinct colors actually used.
  std::size_t used_colors() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// A coloring that does not assign every vertex. Kept apart from the
/// proper/improper verdict so callers can tell "bad input" from "no".
class IncompleteColoring : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff no edge is monochromatic and every color is below
/// palette_size. Throws IncompleteColoring when a vertex is missing.
bool verify_coloring(const Graph& g, const Coloring& c);

}  // namespace critfam
