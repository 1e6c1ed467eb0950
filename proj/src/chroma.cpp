#include "critfam/chroma.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace critfam {

std::size_t Coloring::used_colors() const {
  std::set<Color> seen(colors.begin(), colors.end());
  seen.erase(kUncolored);
  return seen.size();
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.order())
    throw IncompleteColoring("coloring covers " + std::to_string(c.colors.size()) + " of " +
                             std::to_string(g.order()) + " vertices");
  for (Vertex v = 0; v < g.order(); ++v)
    if (c.colors[v] < 0) throw IncompleteColoring("vertex " + std::to_string(v) + " has no color");
  for (Color col : c.colors)
    if (static_cast<std::size_t>(col) >= c.palette_size) return false;
  for (const auto& [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

namespace {

// Per-vertex counts of colored neighbours by color, plus the derived
// saturation and uncolored-degree used for DSATUR ordering.
class DsaturState {
 public:
  DsaturState(const Graph& g, std::size_t palette)
      : g_(g),
        palette_(palette),
        color_(g.order(), kUncolored),
        seen_(g.order() * palette, 0),
        saturation_(g.order(), 0),
        free_degree_(g.degrees()),
        adj_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) adj_[v] = g.neighbors(v);
  }

  std::size_t order() const { return g_.order(); }
  Color color(Vertex v) const { return color_[v]; }
  std::size_t saturation(Vertex v) const { return saturation_[v]; }
  bool allowed(Vertex v, Color c) const { return seen_[v * palette_ + static_cast<std::size_t>(c)] == 0; }

  void assign(Vertex v, Color c) {
    color_[v] = c;
    for (Vertex u : adj_[v]) {
      --free_degree_[u];
      if (seen_[u * palette_ + static_cast<std::size_t>(c)]++ == 0) ++saturation_[u];
    }
  }

  void unassign(Vertex v) {
    const Color c = color_[v];
    color_[v] = kUncolored;
    for (Vertex u : adj_[v]) {
      ++free_degree_[u];
      if (--seen_[u * palette_ + static_cast<std::size_t>(c)] == 0) --saturation_[u];
    }
  }

  /// Uncolored vertex with highest saturation, then highest uncolored
  /// degree, then lowest index. Returns order() when all are colored.
  Vertex pick() const {
    Vertex best = g_.order();
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] != kUncolored) continue;
      if (best == g_.order() || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && free_degree_[v] > free_degree_[best]))
        best = v;
    }
    return best;
  }

  Coloring result(std::size_t palette_size) const { return Coloring{color_, palette_size}; }

 private:
  const Graph& g_;
  std::size_t palette_;
  std::vector<Color> color_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> free_degree_;
  std::vector<VertexSet> adj_;
};

class KColorSearch {
 public:
  KColorSearch(const Graph& g, std::size_t k, std::uint64_t max_nodes)
      : state_(g, std::max<std::size_t>(k, 1)), k_(k), max_nodes_(max_nodes) {}

  KColorVerdict run(const VertexSet& seed) {
    for (std::size_t i = 0; i < seed.size(); ++i) state_.assign(seed[i], static_cast<Color>(i));
    opened_ = seed.size();
    return descend();
  }

  Coloring coloring() const { return state_.result(k_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  KColorVerdict descend() {
    const Vertex v = state_.pick();
    if (v == npos()) return KColorVerdict::colorable;
    if (state_.saturation(v) >= k_) return KColorVerdict::not_colorable;

    const std::size_t limit = std::min(opened_ + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      const auto col = static_cast<Color>(c);
      if (!state_.allowed(v, col)) continue;
      if (++nodes_ > max_nodes_) return KColorVerdict::budget_exhausted;
      const std::size_t saved = opened_;
      if (c == opened_) ++opened_;
      state_.assign(v, col);
      const auto r = descend();
      if (r != KColorVerdict::not_colorable) return r;
      state_.unassign(v);
      opened_ = saved;
    }
    return KColorVerdict::not_colorable;
  }

  Vertex npos() const { return state_.order(); }

  DsaturState state_;
  std::size_t k_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::size_t opened_ = 0;
};

VertexSet greedy_clique_from(const Graph& g, Vertex start) {
  VertexSet clique{start};
  VertexSet cand = g.neighbors(start);
  while (!cand.empty()) {
    Vertex best = cand.front();
    std::size_t best_links = 0;
    bool first = true;
    for (Vertex c : cand) {
      std::size_t links = 0;
      for (Vertex d : cand)
        if (g.adjacent(c, d)) ++links;
      if (first || links > best_links) {
        best = c;
        best_links = links;
        first = false;
      }
    }
    clique.push_back(best);
    VertexSet next;
    for (Vertex c : cand)
      if (c != best && g.adjacent(c, best)) next.push_back(c);
    cand = std::move(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// Drop one member and add two outside vertices adjacent to the rest, as
// long as that succeeds.
bool improve_once(const Graph& g, VertexSet& clique) {
  for (std::size_t drop = 0; drop < clique.size(); ++drop) {
    VertexSet rest;
    for (std::size_t i = 0; i < clique.size(); ++i)
      if (i != drop) rest.push_back(clique[i]);
    VertexSet cand;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == clique[drop] || std::binary_search(rest.begin(), rest.end(), v)) continue;
      if (std::all_of(rest.begin(), rest.end(), [&](Vertex r) { return g.adjacent(v, r); })) cand.push_back(v);
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (g.adjacent(cand[a], cand[b])) {
          rest.push_back(cand[a]);
          rest.push_back(cand[b]);
          std::sort(rest.begin(), rest.end());
          clique = std::move(rest);
          return true;
        }
  }
  return false;
}

}  // namespace

Coloring dsatur_upper(const Graph& g) {
  const std::size_t n = g.order();
  DsaturState state(g, std::max<std::size_t>(n, 1));
  std::size_t used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const Vertex v = state.pick();
    Color c = 0;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
    used = std::max(used, static_cast<std::size_t>(c) + 1);
  }
  return state.result(used);
}

VertexSet clique_lower(const Graph& g) {
  VertexSet best;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = greedy_clique_from(g, v);
    if (c.size() > best.size()) best = std::move(c);
  }
  while (improve_once(g, best)) {
  }
  return best;
}

KColorResult is_k_colorable(const Graph& g, std::size_t k, std::uint64_t max_nodes) {
  const auto t0 = std::chrono::steady_clock::now();
  KColorResult out;
  if (g.order() == 0) {
    out.verdict = KColorVerdict::colorable;
    out.coloring = Coloring{{}, k};
    return out;
  }
  const VertexSet seed = clique_lower(g);
  if (seed.size() > k) {
    out.verdict = KColorVerdict::not_colorable;
  } else {
    KColorSearch search(g, k, max_nodes);
    out.verdict = search.run(seed);
    out.stats.nodes = search.nodes();
    if (out.verdict == KColorVerdict::colorable) out.coloring = search.coloring();
  }
  out.stats.elapsed = std::chrono::steady_clock::now() - t0;
  return out;
}

ChiResult chromatic_number(const Graph& g, std::uint64_t max_nodes) {
  const auto t0 = std::chrono::steady_clock::now();
  ChiResult r;
  r.clique = clique_lower(g);
  r.coloring = dsatur_upper(g);
  r.lower_bound = r.clique.size();
  r.upper_bound = r.coloring.palette_size;

  while (r.lower_bound < r.upper_bound) {
    auto attempt = is_k_colorable(g, r.lower_bound, max_nodes);
    r.stats.nodes += attempt.stats.nodes;
    if (attempt.verdict == KColorVerdict::budget_exhausted) {
      r.status = SolveStatus::budget_exhausted;
      break;
    }
    if (attempt.verdict == KColorVerdict::colorable) {
      r.upper_bound = r.lower_bound;
      r.coloring = std::move(*attempt.coloring);
      break;
    }
    ++r.lower_bound;
  }
  if (r.status == SolveStatus::exact) r.chi = r.upper_bound;
  r.stats.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

}  // namespace critfam
