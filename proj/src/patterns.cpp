#include "critfam/patterns.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace critfam {

namespace {

constexpr std::size_t kMaxPatternOrder = 16;

std::size_t parse_size(std::string_view digits, std::string_view name) {
  std::size_t t = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, t);
  if (digits.empty() || ec != std::errc() || ptr != end)
    throw UnknownPattern("unknown pattern '" + std::string(name) + "'");
  if (t < 1 || t > kMaxPatternOrder)
    throw UnknownPattern("pattern '" + std::string(name) + "' size must be between 1 and " +
                         std::to_string(kMaxPatternOrder));
  return t;
}

using bits::Word;

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const Graph& h) : g_(g), h_(h), words_(bits::words_for(g.order())) {
    plan_order();
    hdeg_ = h.degrees();
    gdeg_ = g.degrees();
  }

  std::optional<VertexMap> run() {
    phi_.assign(h_.order(), 0);
    std::vector<Word> used(words_, 0);
    if (!extend(0, used)) return std::nullopt;
    return phi_;
  }

 private:
  // Pattern vertex with the most already-placed neighbours goes next;
  // ties go to the lowest index.
  void plan_order() {
    const std::size_t k = h_.order();
    std::vector<bool> placed(k, false);
    for (std::size_t step = 0; step < k; ++step) {
      std::size_t best = k;
      std::size_t best_links = 0;
      for (Vertex u = 0; u < k; ++u) {
        if (placed[u]) continue;
        std::size_t links = 0;
        for (Vertex w = 0; w < k; ++w)
          if (placed[w] && h_.adjacent(u, w)) ++links;
        if (best == k || links > best_links) {
          best = u;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool extend(std::size_t depth, std::vector<Word>& used) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];

    std::vector<Word> cand(words_, ~Word{0});
    if (const std::size_t tail = g_.order() % bits::kWordBits; tail != 0 && words_ > 0)
      cand.back() = (Word{1} << tail) - 1;
    for (std::size_t i = 0; i < words_; ++i) cand[i] &= ~used[i];
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex w = order_[d];
      const auto row = g_.row(phi_[w]);
      if (h_.adjacent(u, w)) {
        for (std::size_t i = 0; i < words_; ++i) cand[i] &= row[i];
      } else {
        for (std::size_t i = 0; i < words_; ++i) cand[i] &= ~row[i];
      }
    }

    for (std::size_t i = 0; i < words_; ++i) {
      Word w = cand[i];
      while (w) {
        const Vertex v = i * bits::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        if (gdeg_[v] < hdeg_[u]) continue;
        phi_[u] = v;
        bits::set(used, v);
        if (extend(depth + 1, used)) return true;
        bits::reset(used, v);
      }
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> hdeg_;
  std::vector<std::size_t> gdeg_;
  VertexMap phi_;
};

}  // namespace

Pattern make_pattern(std::string_view name) {
  if (name == "2K2" || name == "2P2") {
    return {"2K2", disjoint_union(complete_graph(2), complete_graph(2))};
  }
  if (name == "K3+P1") return {"K3+P1", disjoint_union(complete_graph(3), Graph(1))};
  if (name.size() < 2) throw UnknownPattern("unknown pattern '" + std::string(name) + "'");

  const std::size_t t = parse_size(name.substr(1), name);
  const std::string canonical = std::string(1, name[0]) + std::to_string(t);
  switch (name[0]) {
    case 'P':
      return {canonical, path_graph(t)};
    case 'K':
      return {canonical, complete_graph(t)};
    case 'C':
      if (t < 3) throw UnknownPattern("cycle patterns need at least 3 vertices");
      return {canonical, cycle_graph(t)};
    default:
      throw UnknownPattern("unknown pattern '" + std::string(name) + "'");
  }
}

std::vector<Pattern> parse_patterns(std::string_view list) {
  std::vector<Pattern> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto token = list.substr(0, comma);
    out.push_back(make_pattern(token));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return std::nullopt;
  return InducedSearch(g, h).run();
}

bool witness_holds(const Graph& g, const Graph& h, std::span<const Vertex> phi) {
  if (phi.size() != h.order()) return false;
  std::vector<Vertex> sorted(phi.begin(), phi.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!sorted.empty() && sorted.back() >= g.order()) return false;
  for (Vertex a = 0; a < h.order(); ++a)
    for (Vertex b = a + 1; b < h.order(); ++b)
      if (h.adjacent(a, b) != g.adjacent(phi[a], phi[b])) return false;
  return true;
}

std::vector<FreenessVerdict> freeness_report(const Graph& g, std::span<const Pattern> patterns) {
  std::vector<FreenessVerdict> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) {
    FreenessVerdict v;
    v.pattern = p.name;
    v.witness = contains_induced(g, p);
    v.free = !v.witness.has_value();
    out.push_back(std::move(v));
  }

  // P5 contains an induced 2K2, so 2K2-free must imply P5-free.
  const auto find = [&](std::string_view name) {
    return std::find_if(out.begin(), out.end(), [&](const auto& v) { return v.pattern == name; });
  };
  const auto two_k2 = find("2K2");
  const auto p5 = find("P5");
  if (two_k2 != out.end() && p5 != out.end() && two_k2->free && !p5->free)
    throw std::logic_error("induced search inconsistency: 2K2-free graph reported to contain P5");
  return out;
}

}  // namespace critfam
