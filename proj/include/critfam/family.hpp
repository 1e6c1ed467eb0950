#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "critfam/coloring.hpp"
#include "critfam/graph.hpp"

namespace critfam {

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters (q, k) of the family member G(q,k) on qk+1 vertices.
class FamilyParams {
 public:
  /// Throws InvalidParams unless q >= 1 and k >= 3.
  FamilyParams(long long q, long long k);

  std::size_t q() const { return q_; }
  std::size_t k() const { return k_; }
  std::size_t order() const { return q_ * k_ + 1; }
  /// Degree of every vertex: q(k-2)+2.
  std::size_t degree() const { return q_ * (k_ - 2) + 2; }
  std::size_t edge_count() const { return order() * degree() / 2; }

  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;

 private:
  std::size_t q_;
  std::size_t k_;
};

/// N(v_i) exactly as the neighbourhood rule lists it, before any
/// deduplication: v_{i-1}, v_{i+1}, then v_{i+kj+m} for j = 0..q-1 and
/// m = 2..k-1, every index reduced into 0..qk (i-1 at i=0 wraps to qk).
std::vector<Vertex> formula_neighbourhood(const FamilyParams& p, Vertex i);

/// Materialises G(q,k). The rule is checked to be symmetric while building
/// (throws std::logic_error otherwise).
Graph build_family(const FamilyParams& p);

/// V_i = { v_t : t = i mod k } for i = 0..k-1.
std::vector<VertexSet> partition_classes(const FamilyParams& p);

/// v_j gets color j mod k for j < qk and v_qk gets color k; palette k+1.
/// Checked against build_family(p); throws std::logic_error if improper.
Coloring canonical_coloring(const FamilyParams& p);

/// The window { v_i, ..., v_{i+k-1} } (indices mod qk+1).
VertexSet window(const FamilyParams& p, std::size_t start);

/// i -> i + shift mod qk+1.
std::vector<Vertex> rotation(const FamilyParams& p, std::size_t shift = 1);

/// perm must be a bijection on 0..n-1 (GraphError otherwise). True iff
/// u~v <=> perm(u)~perm(v) for every pair.
bool is_automorphism(const Graph& g, std::span<const Vertex> perm);

}  // namespace critfam
