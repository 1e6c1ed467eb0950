#include "critfam/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace critfam {

namespace {

using Mask = std::uint64_t;

// Degree plus the sorted degrees of the neighbours; equal for any pair of
// vertices an isomorphism may match.
using Signature = std::vector<std::size_t>;

std::vector<Signature> signatures(const Graph& g) {
  const auto deg = g.degrees();
  std::vector<Signature> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Signature s;
    for (Vertex u : g.neighbors(v)) s.push_back(deg[u]);
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), deg[v]);
    sig[v] = std::move(s);
  }
  return sig;
}

std::vector<Mask> masks(const Graph& g) {
  std::vector<Mask> m(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.words_per_row() > 0) m[v] = g.row(v)[0];
  return m;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h)
      : n_(g.order()), gadj_(masks(g)), hadj_(masks(h)), gsig_(signatures(g)), hsig_(signatures(h)) {}

  std::optional<VertexMap> run() {
    auto a = gsig_;
    auto b = hsig_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;

    plan_order();
    phi_.assign(n_, 0);
    if (!extend(0)) return std::nullopt;
    return phi_;
  }

 private:
  // Next vertex: most neighbours already placed, then highest degree,
  // then lowest index.
  void plan_order() {
    order_.clear();
    Mask placed = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex best = n_;
      int best_links = -1;
      std::size_t best_deg = 0;
      for (Vertex v = 0; v < n_; ++v) {
        if ((placed >> v) & 1u) continue;
        const int links = std::popcount(gadj_[v] & placed);
        const std::size_t deg = gsig_[v][0];
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      order_.push_back(best);
      placed |= Mask{1} << best;
    }
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex gv = order_[depth];
    for (Vertex hv = 0; hv < n_; ++hv) {
      if ((used_ >> hv) & 1u) continue;
      if (hsig_[hv] != gsig_[gv]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex gu = order_[d];
        const bool ge = (gadj_[gv] >> gu) & 1u;
        const bool he = (hadj_[hv] >> phi_[gu]) & 1u;
        ok = ge == he;
      }
      if (!ok) continue;
      phi_[gv] = hv;
      used_ |= Mask{1} << hv;
      if (extend(depth + 1)) return true;
      used_ &= ~(Mask{1} << hv);
    }
    return false;
  }

  std::size_t n_;
  std::vector<Mask> gadj_;
  std::vector<Mask> hadj_;
  std::vector<Signature> gsig_;
  std::vector<Signature> hsig_;
  std::vector<Vertex> order_;
  VertexMap phi_;
  Mask used_ = 0;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder)
    throw TooLarge("isomorphism search is limited to " + std::to_string(kIsomorphismMaxOrder) +
                   " vertices, got " + std::to_string(std::max(g.order(), h.order())));
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  return IsoSearch(g, h).run();
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> phi) {
  const std::size_t n = g.order();
  if (phi.size() != n || h.order() != n)
    throw GraphError("map has " + std::to_string(phi.size()) + " entries for graphs on " + std::to_string(n) +
                     " and " + std::to_string(h.order()) + " vertices");
  std::vector<bool> hit(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (phi[v] >= n || hit[phi[v]])
      throw GraphError("map is not a bijection (entry " + std::to_string(v) + " -> " + std::to_string(phi[v]) + ")");
    hit[phi[v]] = true;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(phi[u], phi[v])) return false;
  return true;
}

}  // namespace critfam
