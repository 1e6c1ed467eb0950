#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "critfam/chroma.hpp"
#include "critfam/family.hpp"
#include "critfam/graph.hpp"

namespace critfam {

inline constexpr int kReportSchemaVersion = 1;

struct SolverLimits {
  std::uint64_t max_nodes = kDefaultNodeBudget;
  /// Worker threads for per-vertex deletion solves. Output does not
  /// depend on this.
  unsigned jobs = 1;
};

/// Outcome for one deleted vertex v: chi(G - v), and a (chi-1)-coloring
/// of G - v (relabelled as delete_vertex does) whenever one exists.
struct DeletionResult {
  Vertex vertex = 0;
  SolveStatus status = SolveStatus::exact;
  std::size_t chi = 0;
  std::optional<Coloring> certificate;
  std::uint64_t nodes = 0;
};

struct CriticalityReport {
  SolveStatus status = SolveStatus::exact;
  ChiResult whole;
  std::size_t chi = 0;
  bool critical = false;
  std::vector<DeletionResult> per_vertex;
  /// First vertex (lowest index) whose deletion solve ran out of budget.
  std::optional<Vertex> exhausted_at;
};

/// Exact chi(G) and chi(G - v) for every v. Since deleting a vertex lowers
/// chi by at most one, chi(G - v) is settled by a single (chi-1)-coloring
/// search. Throws GraphError on the empty graph.
CriticalityReport criticality_report(const Graph& g, const SolverLimits& limits = {});

enum class Outcome { pass, fail, budget_exhausted };

struct Verdict {
  std::string name;
  bool claimed = true;  // false: recorded for information only
  Outcome outcome = Outcome::pass;
  nlohmann::json certificate;  // witness, coloring, bijection or counterexample
  std::string note;
};

struct SuiteOptions {
  SolverLimits limits;
  bool chromatic = true;    // chi = k+1 and criticality verdicts
  bool include_timing = false;
};

struct SuiteReport {
  FamilyParams params{1, 3};
  std::vector<Verdict> verdicts;
  /// fail as soon as a claimed verdict fails (the suite stops there);
  /// budget_exhausted if a solver ran out before that.
  Outcome status = Outcome::pass;
  std::chrono::nanoseconds elapsed{0};

  const Verdict* find(std::string_view name) const;
  bool passed() const { return status == Outcome::pass; }
};

/// Checks every structural, freeness, coloring and criticality claim made
/// for G(q,k), cheap verdicts first. Checks the construction does not
/// promise for these parameters are still run and kept with claimed=false.
SuiteReport family_lemma_suite(const FamilyParams& p, const SuiteOptions& options = {});

/// Stable JSON documents ({"schema":1, ...}). Timing fields only appear
/// when include_timing is set.
nlohmann::json to_json(const SuiteReport& r, bool include_timing = false);
nlohmann::json to_json(const CriticalityReport& r);
nlohmann::json to_json(const Coloring& c);

std::string_view outcome_name(Outcome o);

/// Independent re-check of every certificate in a suite report against a
/// freshly built G(q,k). Returns the names of verdicts whose certificate
/// does not hold up.
std::vector<std::string> audit_certificates(const SuiteReport& r);

}  // namespace critfam
