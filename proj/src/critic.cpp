#include "critfam/critic.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "critfam/isomorphism.hpp"
#include "critfam/patterns.hpp"

namespace critfam {

using nlohmann::json;

namespace {

DeletionResult solve_deletion(const Graph& g, Vertex v, std::size_t chi, std::uint64_t max_nodes) {
  DeletionResult d;
  d.vertex = v;
  const Graph rest = delete_vertex(g, v);
  auto attempt = is_k_colorable(rest, chi - 1, max_nodes);
  d.nodes = attempt.stats.nodes;
  switch (attempt.verdict) {
    case KColorVerdict::colorable:
      d.chi = chi - 1;
      d.certificate = std::move(attempt.coloring);
      break;
    case KColorVerdict::not_colorable:
      d.chi = chi;
      break;
    case KColorVerdict::budget_exhausted:
      d.status = SolveStatus::budget_exhausted;
      break;
  }
  return d;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results are
// written by index, so scheduling order never shows in the output.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
}

json vertex_list(std::span<const Vertex> vs) { return json(std::vector<Vertex>(vs.begin(), vs.end())); }

Verdict make_verdict(std::string name, bool claimed) {
  Verdict v;
  v.name = std::move(name);
  v.claimed = claimed;
  return v;
}

Outcome outcome_of(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

// Fills the report, stopping after the first claimed failure.
class SuiteRunner {
 public:
  SuiteRunner(const FamilyParams& p, const SuiteOptions& o) : p_(p), opt_(o) { report_.params = p; }

  SuiteReport run() {
    const auto t0 = std::chrono::steady_clock::now();
    run_all();
    report_.elapsed = std::chrono::steady_clock::now() - t0;
    return std::move(report_);
  }

 private:
  bool stopped() const { return report_.status != Outcome::pass; }

  void record(Verdict v) {
    if (v.claimed && v.outcome == Outcome::fail) report_.status = Outcome::fail;
    if (v.outcome == Outcome::budget_exhausted && report_.status == Outcome::pass)
      report_.status = Outcome::budget_exhausted;
    report_.verdicts.push_back(std::move(v));
  }

  void run_all() {
    check_rule();
    if (stopped()) return;
    g_ = build_family(p_);
    for (auto step : {&SuiteRunner::check_order, &SuiteRunner::check_regular, &SuiteRunner::check_partition,
                      &SuiteRunner::check_v0, &SuiteRunner::check_windows, &SuiteRunner::check_rotation,
                      &SuiteRunner::check_canonical, &SuiteRunner::check_truncated, &SuiteRunner::check_special,
                      &SuiteRunner::check_freeness, &SuiteRunner::check_chromatic}) {
      (this->*step)();
      if (stopped()) return;
    }
  }

  void check_rule() {
    Verdict v = make_verdict("neighbourhood_rule_symmetric", true);
    const std::size_t n = p_.order();
    std::vector<VertexSet> nb(n);
    for (Vertex i = 0; i < n; ++i) {
      nb[i] = formula_neighbourhood(p_, i);
      std::sort(nb[i].begin(), nb[i].end());
    }
    for (Vertex i = 0; i < n && v.outcome == Outcome::pass; ++i)
      for (Vertex j : nb[i])
        if (j == i || !std::binary_search(nb[j].begin(), nb[j].end(), i)) {
          v.outcome = Outcome::fail;
          v.certificate = {{"from", i}, {"to", j}};
          break;
        }
    record(std::move(v));
  }

  void check_order() {
    Verdict v = make_verdict("vertex_count", true);
    v.outcome = outcome_of(g_.order() == p_.order());
    v.certificate = {{"n", g_.order()}, {"expected", p_.order()}};
    record(std::move(v));
  }

  // Not stated outright; follows from the rule listing q(k-2)+2 distinct
  // neighbours. Recorded unclaimed.
  void check_regular() {
    Verdict v = make_verdict("regular_degree", false);
    std::size_t duplicates = 0;
    for (Vertex i = 0; i < p_.order(); ++i) {
      auto raw = formula_neighbourhood(p_, i);
      std::sort(raw.begin(), raw.end());
      duplicates += raw.size() - static_cast<std::size_t>(std::unique(raw.begin(), raw.end()) - raw.begin());
    }
    const auto deg = g_.degrees();
    const auto bad = std::find_if(deg.begin(), deg.end(), [&](std::size_t d) { return d != p_.degree(); });
    v.outcome = outcome_of(bad == deg.end() && duplicates == 0 && g_.size() == p_.edge_count());
    v.certificate = {{"degree", p_.degree()}, {"edges", g_.size()}, {"rule_duplicates", duplicates}};
    if (bad != deg.end())
      v.certificate["counterexample"] = {{"vertex", bad - deg.begin()}, {"degree", *bad}};
    record(std::move(v));
  }

  void check_partition() {
    Verdict v = make_verdict("partition_classes", true);
    const auto classes = partition_classes(p_);
    for (std::size_t i = 1; i < classes.size() && v.outcome == Outcome::pass; ++i) {
      if (!is_stable_set(g_, classes[i])) {
        v.outcome = Outcome::fail;
        v.certificate = {{"unstable_class", i}, {"members", vertex_list(classes[i])}};
      }
    }
    if (v.outcome == Outcome::pass) {
      const auto inside = induced_subgraph(g_, classes[0]).edges();
      const bool single = inside.size() == 1 && inside[0] == Edge{0, classes[0].size() - 1};
      v.outcome = outcome_of(single);
      json e = json::array();
      for (const auto& [a, b] : inside) e.push_back({classes[0][a], classes[0][b]});
      v.certificate = {{"v0_edges", e}, {"class_sizes", json::array()}};
      for (const auto& c : classes) v.certificate["class_sizes"].push_back(c.size());
    }
    record(std::move(v));
  }

  void check_v0() {
    Verdict v = make_verdict("neighbourhood_v0", true);
    VertexSet expected{1, p_.q() * p_.k()};
    const auto classes = partition_classes(p_);
    for (std::size_t i = 2; i < p_.k(); ++i) expected.insert(expected.end(), classes[i].begin(), classes[i].end());
    std::sort(expected.begin(), expected.end());
    const auto actual = g_.neighbors(0);
    v.outcome = outcome_of(actual == expected);
    v.certificate = {{"neighbours", vertex_list(actual)}};
    if (actual != expected) v.certificate["expected"] = vertex_list(expected);
    record(std::move(v));
  }

  void check_windows() {
    Verdict v = make_verdict("clique_windows", true);
    const std::size_t last = (p_.q() - 1) * p_.k() + 1;
    for (std::size_t i = 0; i <= last; ++i) {
      if (!is_clique(g_, window(p_, i))) {
        v.outcome = Outcome::fail;
        v.certificate = {{"window_start", i}};
        break;
      }
    }
    if (v.outcome == Outcome::pass) v.certificate = {{"windows", last + 1}, {"size", p_.k()}};
    record(std::move(v));
  }

  void check_rotation() {
    Verdict v = make_verdict("rotation_automorphism", true);
    v.outcome = outcome_of(is_automorphism(g_, rotation(p_)));
    v.certificate = {{"shift", 1}};
    record(std::move(v));
  }

  void check_canonical() {
    Verdict v = make_verdict("canonical_coloring", true);
    try {
      const Coloring c = canonical_coloring(p_);
      const auto top = std::count(c.colors.begin(), c.colors.end(), static_cast<Color>(p_.k()));
      v.outcome = outcome_of(verify_coloring(g_, c) && top == 1);
      v.certificate = to_json(c);
    } catch (const std::logic_error& e) {
      v.outcome = Outcome::fail;
      v.note = e.what();
    }
    record(std::move(v));
  }

  // G - v_qk with v_j -> j mod k.
  void check_truncated() {
    Verdict v = make_verdict("truncated_coloring", true);
    const std::size_t last = p_.q() * p_.k();
    Coloring c;
    c.palette_size = p_.k();
    for (Vertex j = 0; j < last; ++j) c.colors.push_back(static_cast<Color>(j % p_.k()));
    v.outcome = outcome_of(verify_coloring(delete_vertex(g_, last), c));
    v.certificate = {{"deleted", last}, {"coloring", to_json(c)}};
    record(std::move(v));
  }

  void check_special() {
    if (p_.q() > 2) return;
    Graph target;
    std::string name;
    if (p_.q() == 1) {
      target = complete_graph(p_.k() + 1);
      name = "isomorphic_K" + std::to_string(p_.k() + 1);
    } else {
      target = complement(cycle_graph(2 * p_.k() + 1));
      name = "isomorphic_complement_C" + std::to_string(2 * p_.k() + 1);
    }
    Verdict v = make_verdict(name, true);
    const auto phi = find_isomorphism(g_, target);
    v.outcome = outcome_of(phi.has_value());
    if (phi) v.certificate = {{"bijection", vertex_list(*phi)}};
    record(std::move(v));
  }

  void check_freeness() {
    struct Gate {
      const char* pattern;
      bool applies;
      bool claimed;
    };
    const std::size_t k = p_.k();
    const Gate gates[] = {{"2K2", true, k >= 4},
                          {"K3+P1", true, k >= 4},
                          {"C5", true, k >= 5},
                          {"P5", true, k >= 4},
                          {"P7", k == 3, true}};
    std::vector<Pattern> patterns;
    std::vector<bool> claimed;
    for (const auto& gate : gates) {
      if (!gate.applies) continue;
      patterns.push_back(make_pattern(gate.pattern));
      claimed.push_back(gate.claimed);
    }
    const auto verdicts = freeness_report(g_, patterns);
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      Verdict v = make_verdict("free_" + verdicts[i].pattern, claimed[i]);
      v.outcome = outcome_of(verdicts[i].free);
      v.certificate = verdicts[i].witness ? json{{"witness", vertex_list(*verdicts[i].witness)}}
                                          : json{{"witness", nullptr}};
      if (!claimed[i]) v.note = "not claimed for these parameters";
      record(std::move(v));
    }
  }

  void check_chromatic() {
    if (!opt_.chromatic) return;
    auto crit = criticality_report(g_, opt_.limits);

    Verdict chi = make_verdict("chromatic_number", true);
    if (crit.whole.status == SolveStatus::budget_exhausted) {
      chi.outcome = Outcome::budget_exhausted;
      chi.certificate = {{"lower_bound", crit.whole.lower_bound}, {"upper_bound", crit.whole.upper_bound}};
      record(std::move(chi));
      return;
    }
    chi.outcome = outcome_of(crit.chi == p_.k() + 1);
    chi.certificate = {{"chi", crit.chi},
                       {"coloring", to_json(crit.whole.coloring)},
                       {"clique", vertex_list(crit.whole.clique)}};
    record(std::move(chi));
    if (stopped()) return;

    Verdict critical = make_verdict("vertex_critical", true);
    if (crit.status == SolveStatus::budget_exhausted) {
      critical.outcome = Outcome::budget_exhausted;
      critical.certificate = {{"exhausted_at", *crit.exhausted_at}};
      record(std::move(critical));
      return;
    }
    // Rotation makes all deletions equivalent; every vertex is still solved
    // and the answers must agree.
    const bool uniform = std::all_of(crit.per_vertex.begin(), crit.per_vertex.end(),
                                     [&](const DeletionResult& d) { return d.chi == crit.per_vertex.front().chi; });
    critical.outcome = outcome_of(crit.critical && uniform);
    critical.certificate = to_json(crit)["deletions"];
    record(std::move(critical));
  }

  FamilyParams p_;
  SuiteOptions opt_;
  SuiteReport report_;
  Graph g_;
};

}  // namespace

CriticalityReport criticality_report(const Graph& g, const SolverLimits& limits) {
  if (g.order() == 0) throw GraphError("criticality needs at least one vertex");
  CriticalityReport r;
  r.whole = chromatic_number(g, limits.max_nodes);
  if (r.whole.status == SolveStatus::budget_exhausted) {
    r.status = SolveStatus::budget_exhausted;
    return r;
  }
  r.chi = r.whole.chi;
  r.per_vertex.resize(g.order());
  parallel_for(g.order(), limits.jobs,
               [&](std::size_t v) { r.per_vertex[v] = solve_deletion(g, v, r.chi, limits.max_nodes); });

  r.critical = true;
  for (const auto& d : r.per_vertex) {
    if (d.status == SolveStatus::budget_exhausted) {
      r.status = SolveStatus::budget_exhausted;
      if (!r.exhausted_at) r.exhausted_at = d.vertex;
      r.critical = false;
    } else if (d.chi != r.chi - 1) {
      r.critical = false;
    }
  }
  return r;
}

SuiteReport family_lemma_suite(const FamilyParams& p, const SuiteOptions& options) {
  return SuiteRunner(p, options).run();
}

const Verdict* SuiteReport::find(std::string_view name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

json to_json(const Coloring& c) { return {{"palette", c.palette_size}, {"colors", c.colors}}; }

json to_json(const CriticalityReport& r) {
  json out;
  out["schema"] = kReportSchemaVersion;
  out["status"] = r.status == SolveStatus::exact ? "exact" : "budget_exhausted";
  out["chi"] = r.whole.status == SolveStatus::exact ? json(r.chi) : json(nullptr);
  out["critical"] = r.critical;
  out["lower_bound"] = r.whole.lower_bound;
  out["upper_bound"] = r.whole.upper_bound;
  out["coloring"] = to_json(r.whole.coloring);
  out["clique"] = vertex_list(r.whole.clique);
  json dels = json::array();
  for (const auto& d : r.per_vertex) {
    json e{{"vertex", d.vertex}};
    if (d.status == SolveStatus::budget_exhausted) {
      e["chi"] = nullptr;
      e["status"] = "budget_exhausted";
    } else {
      e["chi"] = d.chi;
    }
    e["certificate"] = d.certificate ? to_json(*d.certificate) : json(nullptr);
    dels.push_back(std::move(e));
  }
  out["deletions"] = std::move(dels);
  if (r.exhausted_at) out["exhausted_at"] = *r.exhausted_at;
  return out;
}

json to_json(const SuiteReport& r, bool include_timing) {
  json out;
  out["schema"] = kReportSchemaVersion;
  out["params"] = {{"q", r.params.q()}, {"k", r.params.k()}, {"n", r.params.order()}};
  out["corollary_applies"] = r.params.k() + 1 >= 6;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json e{{"name", v.name},
           {"claimed", v.claimed},
           {"pass", v.outcome == Outcome::pass},
           {"outcome", outcome_name(v.outcome)},
           {"certificate", v.certificate}};
    if (!v.note.empty()) e["note"] = v.note;
    verdicts.push_back(std::move(e));
  }
  out["verdicts"] = std::move(verdicts);
  out["status"] = outcome_name(r.status);
  out["pass"] = r.passed();
  if (include_timing)
    out["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return out;
}

std::vector<std::string> audit_certificates(const SuiteReport& r) {
  std::vector<std::string> bad;
  const Graph g = build_family(r.params);
  const auto coloring_from = [](const json& j) {
    Coloring c;
    c.palette_size = j.at("palette").get<std::size_t>();
    c.colors = j.at("colors").get<std::vector<Color>>();
    return c;
  };
  for (const auto& v : r.verdicts) {
    bool ok = true;
    try {
      if (v.name == "canonical_coloring") {
        ok = verify_coloring(g, coloring_from(v.certificate));
      } else if (v.name == "truncated_coloring") {
        ok = verify_coloring(delete_vertex(g, v.certificate.at("deleted").get<Vertex>()),
                             coloring_from(v.certificate.at("coloring")));
      } else if (v.name == "chromatic_number" && v.outcome != Outcome::budget_exhausted) {
        const auto c = coloring_from(v.certificate.at("coloring"));
        const auto clique = v.certificate.at("clique").get<VertexSet>();
        const auto chi = v.certificate.at("chi").get<std::size_t>();
        ok = verify_coloring(g, c) && c.palette_size == chi && is_clique(g, clique) && clique.size() <= chi;
      } else if (v.name == "vertex_critical" && v.outcome != Outcome::budget_exhausted) {
        for (const auto& d : v.certificate) {
          if (d.at("certificate").is_null()) continue;
          ok = ok && verify_coloring(delete_vertex(g, d.at("vertex").get<Vertex>()), coloring_from(d.at("certificate")));
        }
      } else if (v.name.starts_with("isomorphic_") && v.outcome == Outcome::pass) {
        const auto phi = v.certificate.at("bijection").get<VertexMap>();
        const Graph target = v.name.starts_with("isomorphic_K")
                                 ? complete_graph(r.params.k() + 1)
                                 : complement(cycle_graph(2 * r.params.k() + 1));
        ok = is_isomorphism(g, target, phi);
      } else if (v.name.starts_with("free_")) {
        const auto& w = v.certificate.at("witness");
        if (!w.is_null()) ok = witness_holds(g, make_pattern(v.name.substr(5)).graph, w.get<VertexMap>());
      }
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) bad.push_back(v.name);
  }
  return bad;
}

}  // namespace critfam
