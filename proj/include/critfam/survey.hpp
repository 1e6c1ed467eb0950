#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "critfam/critic.hpp"

namespace critfam {

/// q = 1..4 with k = 3..6, plus q = 1..3 with k = 7; sorted by (q, k).
std::vector<FamilyParams> default_survey_grid();
/// Every (q, k) with 1 <= q <= qmax and 3 <= k <= kmax.
std::vector<FamilyParams> rectangle_grid(long long qmax, long long kmax);

/// Runs family_lemma_suite on every cell using `jobs` worker threads.
/// Reports come back in (q, k) order whatever the scheduling.
std::vector<SuiteReport> run_survey(std::span<const FamilyParams> grid, const SuiteOptions& options, unsigned jobs);

/// One row per cell. Unclaimed freeness results are shown in parentheses,
/// checks that were not run as "-". The time column is optional so that
/// runs can be compared byte for byte.
std::string render_survey_table(std::span<const SuiteReport> reports, bool include_timing);
nlohmann::json survey_json(std::span<const SuiteReport> reports, bool include_timing);

}  // namespace critfam
