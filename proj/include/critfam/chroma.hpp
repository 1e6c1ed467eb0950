#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "critfam/coloring.hpp"
#include "critfam/graph.hpp"

namespace critfam {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Proper DSATUR coloring. Picks highest saturation, then highest degree
/// among uncolored vertices, then lowest index; always the smallest free
/// color. palette_size equals the number of colors used.
Coloring dsatur_upper(const Graph& g);

/// Greedy clique from every start vertex followed by 1-for-2 swaps on the
/// best one found. Deterministic; returned sorted.
VertexSet clique_lower(const Graph& g);

enum class KColorVerdict { colorable, not_colorable, budget_exhausted };

struct KColorResult {
  KColorVerdict verdict = KColorVerdict::not_colorable;
  std::optional<Coloring> coloring;  // set iff colorable
  SearchStats stats;

  explicit operator bool() const { return verdict == KColorVerdict::colorable; }
};

/// Exact k-colorability by DSATUR-ordered backtracking. A clique is
/// pre-colored 0..|C|-1 and further colors are opened in order, which is
/// the only symmetry breaking used. Stops after max_nodes assignments.
KColorResult is_k_colorable(const Graph& g, std::size_t k, std::uint64_t max_nodes = kDefaultNodeBudget);

enum class SolveStatus { exact, budget_exhausted };

struct ChiResult {
  SolveStatus status = SolveStatus::exact;
  std::size_t chi = 0;  // exact when status == exact
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  Coloring coloring;  // proper, with upper_bound colors
  VertexSet clique;   // witnesses chi >= clique.size()
  SearchStats stats;
};

/// Exact chromatic number: is_k_colorable for k = |clique|, |clique|+1, ...
/// below the DSATUR bound; the first success is chi. Each call gets
/// max_nodes. On budget exhaustion the best bounds are returned instead.
ChiResult chromatic_number(const Graph& g, std::uint64_t max_nodes = kDefaultNodeBudget);

}  // namespace critfam
