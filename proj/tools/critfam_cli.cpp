// critfam: build members of the G(q,k) family, check their claimed
// properties, and run exact coloring / freeness queries on arbitrary graphs.
//
// Exit status: 0 all claimed checks hold, 1 a claimed check failed,
// 2 a solver ran out of budget, 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "critfam/chroma.hpp"
#include "critfam/critic.hpp"
#include "critfam/family.hpp"
#include "critfam/graph_io.hpp"
#include "critfam/patterns.hpp"
#include "critfam/survey.hpp"

namespace {

using namespace critfam;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CRITFAM_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("CRITFAM_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultNodeBudget;
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    in = &file;
  }
  if (format == "auto") return read_graph_auto(*in);
  return read_graph(*in, parse_format(format));
}

// Writes to `path`, or stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

void emit_json(const std::string& path, const nlohmann::json& j) {
  if (!path.empty()) emit(path, j.dump(2) + "\n");
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return kExitOk;
    case Outcome::fail:
      return kExitClaimFailed;
    case Outcome::budget_exhausted:
      return kExitBudget;
  }
  return kExitClaimFailed;
}

struct Options {
  long long q = 0;
  long long k = 0;
  long long qmax = 0;
  long long kmax = 0;
  std::string format = "g6";
  std::string input_format = "auto";
  std::string patterns = "2K2,K3+P1,C5";
  std::string input = "-";
  std::string out;
  std::string json;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
  bool timing = false;
  bool skip_chromatic = false;
};

std::uint64_t budget_of(const Options& o) { return o.budget ? *o.budget : default_budget(); }

int run_gen(const Options& o) {
  const FamilyParams p(o.q, o.k);
  std::ostringstream os;
  write_graph(os, build_family(p), parse_format(o.format));
  emit(o.out, os.str());
  return kExitOk;
}

int run_chi(const Options& o) {
  const Graph g = load_graph(o.input, o.input_format);
  const auto r = chromatic_number(g, budget_of(o));
  std::ostringstream os;
  if (r.status == SolveStatus::budget_exhausted) {
    os << "c budget exhausted: " << r.lower_bound << " <= chi <= " << r.upper_bound << '\n';
  } else {
    os << "chi " << r.chi << '\n';
    for (Vertex v = 0; v < g.order(); ++v) os << v << ' ' << r.coloring.colors[v] << '\n';
  }
  emit(o.out, os.str());
  nlohmann::json j{{"schema", kReportSchemaVersion},
                   {"status", r.status == SolveStatus::exact ? "exact" : "budget_exhausted"},
                   {"lower_bound", r.lower_bound},
                   {"upper_bound", r.upper_bound},
                   {"coloring", to_json(r.coloring)},
                   {"clique", r.clique}};
  j["chi"] = r.status == SolveStatus::exact ? nlohmann::json(r.chi) : nlohmann::json(nullptr);
  emit_json(o.json, j);
  return r.status == SolveStatus::exact ? kExitOk : kExitBudget;
}

int run_free(const Options& o) {
  const Graph g = load_graph(o.input, o.input_format);
  const auto patterns = parse_patterns(o.patterns);
  const auto verdicts = freeness_report(g, patterns);
  std::ostringstream os;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) {
    os << v.pattern << (v.free ? " free" : " contained");
    if (v.witness)
      for (Vertex w : *v.witness) os << ' ' << w;
    os << '\n';
    arr.push_back({{"pattern", v.pattern},
                   {"free", v.free},
                   {"witness", v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr)}});
  }
  emit(o.out, os.str());
  emit_json(o.json, {{"schema", kReportSchemaVersion}, {"verdicts", arr}});
  return kExitOk;
}

int run_critical(const Options& o) {
  const Graph g = load_graph(o.input, o.input_format);
  const auto r = criticality_report(g, {budget_of(o), o.jobs});
  std::ostringstream os;
  if (r.whole.status == SolveStatus::budget_exhausted) {
    os << "c budget exhausted computing chi\n";
  } else {
    os << "chi " << r.chi << '\n';
    for (const auto& d : r.per_vertex) {
      os << "delete " << d.vertex << " chi ";
      if (d.status == SolveStatus::budget_exhausted)
        os << "budget";
      else
        os << d.chi;
      os << '\n';
    }
    if (r.status == SolveStatus::exact) os << (r.critical ? "critical\n" : "not critical\n");
  }
  if (r.exhausted_at) std::cerr << "critfam: budget exhausted deleting vertex " << *r.exhausted_at << '\n';
  emit(o.out, os.str());
  emit_json(o.json, to_json(r));
  return r.status == SolveStatus::exact ? kExitOk : kExitBudget;
}

SuiteOptions suite_options(const Options& o) {
  SuiteOptions s;
  s.limits = {budget_of(o), 1};
  s.chromatic = !o.skip_chromatic;
  s.include_timing = o.timing;
  return s;
}

int run_verify_family(const Options& o) {
  const FamilyParams p(o.q, o.k);
  auto so = suite_options(o);
  so.limits.jobs = o.jobs;
  const auto r = family_lemma_suite(p, so);
  std::ostringstream os;
  os << "G(" << p.q() << "," << p.k() << "): n=" << p.order() << " degree=" << p.degree() << '\n';
  for (const auto& v : r.verdicts) {
    os << "  " << (v.claimed ? "" : "(unclaimed) ") << v.name << ": " << outcome_name(v.outcome);
    if (v.name == "chromatic_number" && v.outcome != Outcome::budget_exhausted)
      os << " chi=" << v.certificate.at("chi").get<std::size_t>();
    if (v.name.starts_with("free_") && !v.certificate.at("witness").is_null())
      os << " witness=" << v.certificate.at("witness").dump();
    os << '\n';
  }
  os << outcome_name(r.status) << '\n';
  emit(o.out, os.str());
  emit_json(o.json, to_json(r, o.timing));
  if (r.status == Outcome::fail) std::cerr << "critfam: a claimed property failed for G(" << p.q() << "," << p.k() << ")\n";
  return exit_for(r.status);
}

int run_survey_cmd(const Options& o) {
  std::vector<FamilyParams> grid;
  if (o.qmax == 0 && o.kmax == 0) {
    grid = default_survey_grid();
  } else {
    grid = rectangle_grid(o.qmax == 0 ? 4 : o.qmax, o.kmax == 0 ? 6 : o.kmax);
  }
  const auto reports = run_survey(grid, suite_options(o), o.jobs);
  emit(o.out, render_survey_table(reports, o.timing));
  emit_json(o.json, survey_json(reports, o.timing));

  Outcome worst = Outcome::pass;
  for (const auto& r : reports) {
    if (r.status == Outcome::pass) continue;
    std::cerr << "critfam: G(" << r.params.q() << "," << r.params.k() << ") " << outcome_name(r.status) << '\n';
    if (r.status == Outcome::fail || worst == Outcome::pass) worst = r.status;
  }
  return exit_for(worst);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify the vertex-critical family G(q,k)"};
  app.require_subcommand(1);
  Options o;

  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Search nodes per colorability call (default 1e8, env CRITFAM_BUDGET)")
        ->check(CLI::PositiveNumber);
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Graph file (graph6, DIMACS or edge list); '-' for stdin");
    sub->add_option("--format", o.input_format, "Input format")
        ->check(CLI::IsMember({"auto", "g6", "graph6", "dimacs", "col", "edges"}));
    sub->add_option("--out", o.out, "Write the text result here instead of stdout");
    sub->add_option("--json", o.json, "Write a JSON report here");
  };

  auto* gen = app.add_subcommand("gen", "Write G(q,k) in a graph format");
  gen->add_option("--q", o.q, "Repetition count q >= 1")->required();
  gen->add_option("--k", o.k, "Clique parameter k >= 3")->required();
  gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"g6", "dimacs", "edges"}));
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* chi = app.add_subcommand("chi", "Exact chromatic number with a coloring certificate");
  add_input(chi);
  add_budget(chi);

  auto* fr = app.add_subcommand("free", "Induced-pattern freeness with witnesses");
  add_input(fr);
  fr->add_option("--patterns", o.patterns, "Comma-separated patterns, e.g. 2K2,K3+P1,C5,P7");

  auto* crit = app.add_subcommand("critical", "Vertex-criticality with per-deletion certificates");
  add_input(crit);
  add_budget(crit);
  add_jobs(crit);

  auto* vf = app.add_subcommand("verify-family", "Check every claimed property of G(q,k)");
  vf->add_option("--q", o.q, "Repetition count q >= 1")->required();
  vf->add_option("--k", o.k, "Clique parameter k >= 3")->required();
  vf->add_option("--json", o.json, "Write the JSON report here");
  vf->add_option("--out", o.out, "Write the text summary here instead of stdout");
  vf->add_flag("--timing", o.timing, "Include wall-clock time in the JSON report");
  vf->add_flag("--skip-chromatic", o.skip_chromatic, "Skip chromatic number and criticality");
  add_budget(vf);
  add_jobs(vf);

  auto* sv = app.add_subcommand("survey", "Run verify-family over a (q,k) grid");
  sv->add_option("--qmax", o.qmax, "Largest q (grid q = 1..qmax)");
  sv->add_option("--kmax", o.kmax, "Largest k (grid k = 3..kmax)");
  sv->add_option("--out", o.out, "Write the table here instead of stdout");
  sv->add_option("--json", o.json, "Write the JSON report here");
  sv->add_flag("--timing", o.timing, "Add a time column / elapsed_ms fields");
  sv->add_flag("--skip-chromatic", o.skip_chromatic, "Skip chromatic number and criticality");
  add_budget(sv);
  add_jobs(sv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(o);
    if (*chi) return run_chi(o);
    if (*fr) return run_free(o);
    if (*crit) return run_critical(o);
    if (*vf) return run_verify_family(o);
    if (*sv) return run_survey_cmd(o);
  } catch (const std::invalid_argument& e) {
    // bad parameters, pattern names, graph sizes
    std::cerr << "critfam: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "critfam: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "critfam: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // internal consistency checks (std::logic_error) land here
    std::cerr << "critfam: " << e.what() << '\n';
    return kExitClaimFailed;
  }
  return kExitUsage;
}
