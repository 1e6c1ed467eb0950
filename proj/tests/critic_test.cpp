#include <gtest/gtest.h>

#include "critfam/critic.hpp"
#include "critfam/patterns.hpp"

namespace critfam {
namespace {

TEST(CriticalityReport, CompleteGraphIsCritical) {
  const auto r = criticality_report(complete_graph(4));
  EXPECT_EQ(r.status, SolveStatus::exact);
  EXPECT_EQ(r.chi, 4u);
  EXPECT_TRUE(r.critical);
  ASSERT_EQ(r.per_vertex.size(), 4u);
  for (const auto& d : r.per_vertex) {
    EXPECT_EQ(d.chi, 3u);
    ASSERT_TRUE(d.certificate.has_value());
    EXPECT_TRUE(verify_coloring(delete_vertex(complete_graph(4), d.vertex), *d.certificate));
  }
}

TEST(CriticalityReport, IsolatedVertexBreaksCriticality) {
  const Graph g = disjoint_union(complete_graph(4), Graph(1));
  const auto r = criticality_report(g);
  EXPECT_EQ(r.chi, 4u);
  EXPECT_FALSE(r.critical);
  EXPECT_EQ(r.per_vertex[4].chi, 4u);
  EXPECT_FALSE(r.per_vertex[4].certificate.has_value());
  EXPECT_EQ(r.per_vertex[0].chi, 3u);
}

TEST(CriticalityReport, G36) {
  const Graph g = build_family(FamilyParams(3, 6));
  const auto r = criticality_report(g);
  EXPECT_EQ(r.chi, 7u);
  EXPECT_TRUE(r.critical);
  ASSERT_EQ(r.per_vertex.size(), 19u);
  for (const auto& d : r.per_vertex) {
    EXPECT_EQ(d.chi, 6u);
    ASSERT_TRUE(d.certificate.has_value());
    EXPECT_TRUE(verify_coloring(delete_vertex(g, d.vertex), *d.certificate));
  }
}

TEST(CriticalityReport, OddCycleAndEmptyGraph) {
  EXPECT_TRUE(criticality_report(cycle_graph(7)).critical);
  EXPECT_FALSE(criticality_report(path_graph(4)).critical);
  EXPECT_TRUE(criticality_report(Graph(1)).critical);
  EXPECT_THROW((void)criticality_report(Graph(0)), GraphError);
}

TEST(CriticalityReport, ParallelMatchesSerial) {
  const Graph g = build_family(FamilyParams(3, 5));
  const auto serial = criticality_report(g, {kDefaultNodeBudget, 1});
  const auto parallel = criticality_report(g, {kDefaultNodeBudget, 4});
  EXPECT_EQ(to_json(serial).dump(), to_json(parallel).dump());
}

TEST(CriticalityReport, BudgetNamesVertex) {
  // chi = 4 is settled by the K4 without search. Deleting a K4 vertex
  // leaves G(3,3), whose non-3-colorability needs more than two nodes;
  // deleting anything else keeps the K4 and is refuted by the clique.
  const Graph g = disjoint_union(build_family(FamilyParams(3, 3)), complete_graph(4));
  const auto r = criticality_report(g, {2, 1});
  EXPECT_EQ(r.whole.status, SolveStatus::exact);
  EXPECT_EQ(r.status, SolveStatus::budget_exhausted);
  ASSERT_TRUE(r.exhausted_at.has_value());
  EXPECT_EQ(*r.exhausted_at, 10u);
  EXPECT_EQ(to_json(r)["exhausted_at"], 10);
}

TEST(LemmaSuite, G36PassesEverything) {
  const auto r = family_lemma_suite(FamilyParams(3, 6));
  EXPECT_TRUE(r.passed());
  for (const auto& v : r.verdicts) EXPECT_EQ(v.outcome, Outcome::pass) << v.name;
  for (const char* name : {"vertex_count", "partition_classes", "neighbourhood_v0", "clique_windows",
                           "rotation_automorphism", "canonical_coloring", "truncated_coloring", "free_2K2",
                           "free_K3+P1", "free_C5", "free_P5", "chromatic_number", "vertex_critical"})
    EXPECT_NE(r.find(name), nullptr) << name;
  EXPECT_EQ(r.find("free_P7"), nullptr);
  EXPECT_EQ(r.find("chromatic_number")->certificate["chi"], 7);
  EXPECT_TRUE(audit_certificates(r).empty());
}

TEST(LemmaSuite, CompleteCase) {
  const auto r = family_lemma_suite(FamilyParams(1, 5));
  EXPECT_TRUE(r.passed());
  const Verdict* iso = r.find("isomorphic_K6");
  ASSERT_NE(iso, nullptr);
  EXPECT_EQ(iso->outcome, Outcome::pass);
  EXPECT_TRUE(audit_certificates(r).empty());
}

TEST(LemmaSuite, G24RecordsUnclaimedC5) {
  const auto r = family_lemma_suite(FamilyParams(2, 4));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find("free_2K2")->claimed);
  EXPECT_TRUE(r.find("free_K3+P1")->claimed);
  const Verdict* c5 = r.find("free_C5");
  ASSERT_NE(c5, nullptr);
  EXPECT_FALSE(c5->claimed);
  // Exhaustive 5-subset scan (networkx) finds no induced C5 in G(2,4).
  EXPECT_EQ(c5->outcome, Outcome::pass);
  EXPECT_NE(r.find("isomorphic_complement_C9"), nullptr);
}

TEST(LemmaSuite, KThreeChecksP7Only) {
  const auto r = family_lemma_suite(FamilyParams(4, 3));
  EXPECT_TRUE(r.passed());
  ASSERT_NE(r.find("free_P7"), nullptr);
  EXPECT_TRUE(r.find("free_P7")->claimed);
  EXPECT_FALSE(r.find("free_2K2")->claimed);
  EXPECT_FALSE(r.find("free_P5")->claimed);
}

TEST(LemmaSuite, SkippingChromaticVerdicts) {
  SuiteOptions o;
  o.chromatic = false;
  const auto r = family_lemma_suite(FamilyParams(6, 6), o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("chromatic_number"), nullptr);
}

TEST(LemmaSuite, BudgetExhaustionIsItsOwnStatus) {
  SuiteOptions o;
  o.limits.max_nodes = 2;
  const auto r = family_lemma_suite(FamilyParams(3, 3), o);
  EXPECT_EQ(r.status, Outcome::budget_exhausted);
  EXPECT_EQ(r.find("chromatic_number")->outcome, Outcome::budget_exhausted);
}

TEST(LemmaSuite, JsonSchema) {
  const auto j = to_json(family_lemma_suite(FamilyParams(2, 5)));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["params"]["q"], 2);
  EXPECT_EQ(j["params"]["k"], 5);
  EXPECT_EQ(j["pass"], true);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  for (const auto& v : j["verdicts"]) {
    EXPECT_TRUE(v.contains("name"));
    EXPECT_TRUE(v["claimed"].is_boolean());
    EXPECT_TRUE(v["pass"].is_boolean());
    EXPECT_TRUE(v.contains("certificate"));
  }
  EXPECT_TRUE(to_json(family_lemma_suite(FamilyParams(1, 3)), true).contains("elapsed_ms"));
}

TEST(Audit, CatchesTamperedCertificate) {
  auto r = family_lemma_suite(FamilyParams(2, 5));
  for (auto& v : r.verdicts)
    if (v.name == "chromatic_number") v.certificate["coloring"]["colors"][0] = v.certificate["coloring"]["colors"][1];
  EXPECT_EQ(audit_certificates(r), std::vector<std::string>({"chromatic_number"}));
}

}  // namespace
}  // namespace critfam
