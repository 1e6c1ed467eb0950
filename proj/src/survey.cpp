#include "critfam/survey.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace critfam {

std::vector<FamilyParams> default_survey_grid() {
  std::vector<FamilyParams> grid;
  for (long long q = 1; q <= 4; ++q)
    for (long long k = 3; k <= 7; ++k)
      if (k <= 6 || q <= 3) grid.emplace_back(q, k);
  return grid;
}

std::vector<FamilyParams> rectangle_grid(long long qmax, long long kmax) {
  if (qmax < 1) throw InvalidParams("qmax must be >= 1");
  if (kmax < 3) throw InvalidParams("kmax must be >= 3");
  std::vector<FamilyParams> grid;
  for (long long q = 1; q <= qmax; ++q)
    for (long long k = 3; k <= kmax; ++k) grid.emplace_back(q, k);
  return grid;
}

std::vector<SuiteReport> run_survey(std::span<const FamilyParams> grid, const SuiteOptions& options, unsigned jobs) {
  std::vector<FamilyParams> cells(grid.begin(), grid.end());
  std::sort(cells.begin(), cells.end());
  std::vector<SuiteReport> out(cells.size());

  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) out[i] = family_lemma_suite(cells[i], options);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return out;
}

namespace {

std::string freeness_cell(const SuiteReport& r, const std::string& pattern) {
  const Verdict* v = r.find("free_" + pattern);
  if (!v) return "-";
  std::string s = v->outcome == Outcome::pass ? "free" : "HIT";
  return v->claimed ? s : "(" + s + ")";
}

std::string chi_cell(const SuiteReport& r) {
  const Verdict* v = r.find("chromatic_number");
  if (!v) return "-";
  if (v->outcome == Outcome::budget_exhausted) return "budget";
  return std::to_string(v->certificate.at("chi").get<std::size_t>());
}

std::string critical_cell(const SuiteReport& r) {
  const Verdict* v = r.find("vertex_critical");
  if (!v) return "-";
  switch (v->outcome) {
    case Outcome::pass:
      return "yes";
    case Outcome::fail:
      return "no";
    case Outcome::budget_exhausted:
      return "budget";
  }
  return "?";
}

const char* const kPatterns[] = {"2K2", "K3+P1", "C5", "P5", "P7"};

}  // namespace

std::string render_survey_table(std::span<const SuiteReport> reports, bool include_timing) {
  std::ostringstream os;
  const auto col = [&os](const std::string& s, int w) { os << std::left << std::setw(w) << s; };
  col("q", 4);
  col("k", 4);
  col("n", 5);
  col("degree", 8);
  col("chi", 7);
  col("critical", 10);
  for (const char* p : kPatterns) col(p, 8);
  col("status", include_timing ? 18 : 0);
  if (include_timing) os << "time_ms";
  os << '\n';
  for (const auto& r : reports) {
    col(std::to_string(r.params.q()), 4);
    col(std::to_string(r.params.k()), 4);
    col(std::to_string(r.params.order()), 5);
    col(std::to_string(r.params.degree()), 8);
    col(chi_cell(r), 7);
    col(critical_cell(r), 10);
    for (const char* p : kPatterns) col(freeness_cell(r, p), 8);
    col(std::string(outcome_name(r.status)), include_timing ? 18 : 0);
    if (include_timing)
      os << std::fixed << std::setprecision(1) << std::chrono::duration<double, std::milli>(r.elapsed).count();
    os << '\n';
  }
  return os.str();
}

nlohmann::json survey_json(std::span<const SuiteReport> reports, bool include_timing) {
  nlohmann::json cells = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    cells.push_back(to_json(r, include_timing));
    all = all && r.passed();
  }
  return {{"schema", kReportSchemaVersion}, {"cells", std::move(cells)}, {"pass", all}};
}

}  // namespace critfam
