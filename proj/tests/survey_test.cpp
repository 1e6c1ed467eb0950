#include <gtest/gtest.h>

#include "critfam/survey.hpp"

namespace critfam {
namespace {

TEST(SurveyGrid, DefaultAndRectangle) {
  const auto grid = default_survey_grid();
  EXPECT_EQ(grid.size(), 19u);
  EXPECT_EQ(grid.front(), FamilyParams(1, 3));
  EXPECT_EQ(grid.back(), FamilyParams(4, 6));
  EXPECT_EQ(rectangle_grid(3, 6).size(), 12u);
  EXPECT_THROW((void)rectangle_grid(0, 6), InvalidParams);
  EXPECT_THROW((void)rectangle_grid(2, 2), InvalidParams);
}

TEST(Survey, SingleCellTable) {
  const auto grid = rectangle_grid(1, 3);
  const auto reports = run_survey(grid, {}, 1);
  ASSERT_EQ(reports.size(), 1u);
  const auto table = render_survey_table(reports, false);
  EXPECT_EQ(table,
            "q   k   n    degree  chi    critical  2K2     K3+P1   C5      P5      P7      status\n"
            "1   3   4    3       4      yes       (free)  (free)  (free)  (free)  free    pass\n");
}

TEST(Survey, OrderAndContentIndependentOfJobs) {
  const auto grid = rectangle_grid(2, 5);
  const auto one = run_survey(grid, {}, 1);
  const auto four = run_survey(grid, {}, 4);
  EXPECT_EQ(render_survey_table(one, false), render_survey_table(four, false));
  EXPECT_EQ(survey_json(one, false).dump(), survey_json(four, false).dump());
  for (std::size_t i = 1; i < one.size(); ++i) EXPECT_LT(one[i - 1].params, one[i].params);
}

}  // namespace
}  // namespace critfam
