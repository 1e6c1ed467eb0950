#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "critfam/family.hpp"
#include "critfam/graph.hpp"
#include "critfam/graph_io.hpp"
#include "critfam/isomorphism.hpp"
#include "oracles.hpp"

namespace critfam {
namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

bool well_formed(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
  }
  return true;
}

TEST(FromEdges, BuildsCompleteGraph) {
  const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(k4.order(), 4u);
  EXPECT_EQ(k4.size(), 6u);
  EXPECT_EQ(k4, complete_graph(4));
}

TEST(FromEdges, PathAndSingleton) {
  const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3, path_graph(3));
  EXPECT_FALSE(p3.adjacent(0, 2));
  const Graph one = Graph::from_edges(1, {});
  EXPECT_EQ(one.order(), 1u);
  EXPECT_EQ(one.size(), 0u);
}

TEST(FromEdges, CollapsesDuplicatesInBothOrientations) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(well_formed(g));
}

TEST(FromEdges, RejectsBadPairsNamingThem) {
  try {
    (void)Graph::from_edges(3, {{0, 1}, {1, 3}});
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("(1, 3)"), std::string::npos);
  }
  try {
    (void)Graph::from_edges(3, {{2, 2}});
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(Complement, OfCompleteIsEdgeless) {
  const Graph c = complement(complete_graph(4));
  EXPECT_EQ(c.order(), 4u);
  EXPECT_EQ(c.size(), 0u);
}

TEST(Complement, IsAnInvolution) {
  EXPECT_EQ(complement(complement(path_graph(5))), path_graph(5));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 20, 0.4);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.size() + complement(g).size(), g.order() * (g.order() - 1) / 2);
  }
}

TEST(Complement, OfG24IsTheNineCycle) {
  const Graph c = complement(build_family(FamilyParams(2, 4)));
  const std::vector<Vertex> walk{0, 4, 8, 3, 7, 2, 6, 1, 5};
  EXPECT_EQ(c.size(), 9u);
  for (std::size_t i = 0; i < walk.size(); ++i) EXPECT_TRUE(c.adjacent(walk[i], walk[(i + 1) % walk.size()]));
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(c.degree(v), 2u);
}

TEST(DisjointUnion, ShiftsSecondOperand) {
  const Graph k3p1 = disjoint_union(complete_graph(3), Graph(1));
  EXPECT_EQ(k3p1.order(), 4u);
  EXPECT_EQ(k3p1.size(), 3u);
  EXPECT_EQ(k3p1.degree(3), 0u);

  const Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
  EXPECT_EQ(two_k2.order(), 4u);
  EXPECT_EQ(two_k2.size(), 2u);
  EXPECT_TRUE(two_k2.adjacent(2, 3));
  EXPECT_FALSE(two_k2.adjacent(1, 2));

  EXPECT_EQ(disjoint_union(Graph(0), complete_graph(4)), complete_graph(4));
}

TEST(DisjointUnion, CountsAdd) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph a = oracle::random_graph(rng, i % 9, 0.5);
    const Graph b = oracle::random_graph(rng, (i * 5) % 11, 0.5);
    const Graph u = disjoint_union(a, b);
    EXPECT_EQ(u.order(), a.order() + b.order());
    EXPECT_EQ(u.size(), a.size() + b.size());
    EXPECT_TRUE(well_formed(u));
  }
}

TEST(InducedSubgraph, CycleMinusVertexIsPath) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(find_isomorphism(induced_subgraph(c5, VertexSet{0, 1, 3, 4}), path_graph(4)).has_value());
  EXPECT_EQ(induced_subgraph(complete_graph(4), VertexSet{0, 1}), complete_graph(2));
}

TEST(InducedSubgraph, FamilyClassZeroHasOneEdge) {
  const Graph g = build_family(FamilyParams(3, 6));
  const Graph sub = induced_subgraph(g, VertexSet{0, 6, 12, 18});
  ASSERT_EQ(sub.edges(), std::vector<Edge>({{0, 3}}));
}

TEST(InducedSubgraph, IdentityAndComposition) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 12, 0.45);
    VertexSet all(g.order());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(induced_subgraph(g, all), g);

    const VertexSet s{1, 2, 4, 5, 7, 9, 11};
    const VertexSet t{0, 2, 3, 6};  // positions inside s
    VertexSet mapped;
    for (Vertex x : t) mapped.push_back(s[x]);
    EXPECT_EQ(induced_subgraph(induced_subgraph(g, s), t), induced_subgraph(g, mapped));
  }
}

TEST(InducedSubgraph, RejectsOutOfRangeMember) {
  EXPECT_THROW((void)induced_subgraph(complete_graph(3), VertexSet{0, 3}), GraphError);
  EXPECT_THROW((void)is_stable_set(complete_graph(3), VertexSet{5}), GraphError);
}

TEST(StableSet, FamilyClasses) {
  const Graph g = build_family(FamilyParams(3, 6));
  EXPECT_TRUE(is_stable_set(g, VertexSet{1, 7, 13}));
  EXPECT_FALSE(is_stable_set(g, VertexSet{0, 18}));
  EXPECT_TRUE(is_stable_set(g, VertexSet{}));
}

TEST(Isomorphism, SmallExamples) {
  const auto phi = find_isomorphism(build_family(FamilyParams(1, 4)), complete_graph(5));
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_isomorphism(build_family(FamilyParams(1, 4)), complete_graph(5), *phi));

  const Graph c5 = cycle_graph(5);
  const auto self = find_isomorphism(c5, complement(c5));
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(is_isomorphism(c5, complement(c5), *self));

  EXPECT_FALSE(find_isomorphism(path_graph(4), star(3)).has_value());
}

TEST(Isomorphism, RefusesLargeInputs) {
  EXPECT_THROW((void)find_isomorphism(Graph(65), Graph(65)), TooLarge);
  EXPECT_NO_THROW((void)find_isomorphism(Graph(64), Graph(64)));
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(2024);
  int positives = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 7;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    // Half the time compare against a relabelled copy so both answers occur.
    Graph h;
    if (i % 2 == 0) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Edge> e;
      for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
      h = Graph::from_edges(n, e);
    } else {
      h = oracle::random_graph(rng, n, 0.5);
    }
    const auto phi = find_isomorphism(g, h);
    ASSERT_EQ(phi.has_value(), oracle::isomorphic_by_permutation(g, h)) << "case " << i;
    if (phi) {
      EXPECT_TRUE(is_isomorphism(g, h, *phi));
      ++positives;
    }
  }
  EXPECT_GT(positives, 200);
}

TEST(IsIsomorphism, RejectsNonBijection) {
  EXPECT_THROW((void)is_isomorphism(path_graph(3), path_graph(3), std::vector<Vertex>{0, 0, 1}), GraphError);
  EXPECT_THROW((void)is_isomorphism(path_graph(3), path_graph(3), std::vector<Vertex>{0, 1}), GraphError);
}

// Expected strings come from the oracle encoder and networkx.
TEST(Graph6, EncodesKnownStrings) {
  EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(encode_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(encode_graph6(build_family(FamilyParams(3, 6))), "R~~zx}^r~N}^]^NNrr}]^xx~rr~rrw");
  EXPECT_EQ(encode_graph6(build_family(FamilyParams(2, 4))), "H~[{}^f");
  EXPECT_EQ(encode_graph6(build_family(FamilyParams(2, 5))), "J~|x{~Nx~f_");
}

TEST(Graph6, DecodesKnownStrings) {
  EXPECT_EQ(decode_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(decode_graph6("C~"), complete_graph(4));
  EXPECT_EQ(decode_graph6("@"), Graph(1));
  EXPECT_EQ(decode_graph6(">>graph6<<C~"), complete_graph(4));
}

TEST(Graph6, RejectsMalformedInputWithOffsets) {
  const auto offset_of = [](std::string_view s) -> long {
    try {
      (void)decode_graph6(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("C"), 1);      // too short
  EXPECT_EQ(offset_of("C~~"), 2);    // too long
  EXPECT_EQ(offset_of("C~ "), 2);    // trailing whitespace
  EXPECT_EQ(offset_of("C~\n"), 2);
  EXPECT_EQ(offset_of("B\x7f"), 1);  // byte 127
  EXPECT_EQ(offset_of("Bx"), 1);     // P3/K3 leave three padding bits; 'x' sets one
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of(">>graph6<<"), 10);
  EXPECT_EQ(offset_of("~"), 0);      // long form
}

TEST(Graph6, EncodingRejectsLargeGraphs) {
  EXPECT_NO_THROW((void)encode_graph6(Graph(62)));
  EXPECT_THROW((void)encode_graph6(Graph(63)), UnsupportedSize);
}

TEST(Graph6, RoundTripsAndMatchesOracle) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, static_cast<std::size_t>(i % 63), 0.3 + 0.4 * (i % 2));
    const std::string s = encode_graph6(g);
    ASSERT_EQ(s, oracle::graph6(g));
    ASSERT_EQ(decode_graph6(s), g);
  }
}

TEST(EdgeList, WritesAndReads) {
  std::ostringstream os;
  write_edge_list(os, path_graph(3));
  EXPECT_EQ(os.str(), "3 2\n0 1\n1 2\n");
  std::istringstream is(os.str());
  EXPECT_EQ(read_edge_list(is), path_graph(3));
}

TEST(EdgeList, ReportsLineOfError) {
  std::istringstream missing("3 2\n0 1\n");
  EXPECT_THROW((void)read_edge_list(missing), ParseError);
  std::istringstream loop("3 1\n\n1 1\n");
  try {
    (void)read_edge_list(loop);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  std::istringstream junk("2 1\n0 x\n");
  EXPECT_THROW((void)read_edge_list(junk), ParseError);
}

TEST(Dimacs, WritesOneIndexedAndReadsBack) {
  std::ostringstream os;
  write_dimacs(os, complete_graph(3), "triangle");
  EXPECT_EQ(os.str(), "c triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  std::istringstream is(os.str());
  EXPECT_EQ(read_dimacs(is), complete_graph(3));
}

TEST(Dimacs, AcceptsBothDirectionsAndRejectsZeroIndex) {
  std::istringstream twice("p edge 2 2\ne 1 2\ne 2 1\n");
  EXPECT_EQ(read_dimacs(twice), complete_graph(2));
  std::istringstream zero("p edge 2 1\ne 0 1\n");
  EXPECT_THROW((void)read_dimacs(zero), ParseError);
  std::istringstream no_header("e 1 2\n");
  EXPECT_THROW((void)read_dimacs(no_header), ParseError);
}

TEST(ReadAuto, SniffsAllThreeFormats) {
  const Graph g = build_family(FamilyParams(2, 5));
  for (auto f : {GraphFormat::graph6, GraphFormat::dimacs, GraphFormat::edges}) {
    std::ostringstream os;
    write_graph(os, g, f);
    std::istringstream is(os.str());
    EXPECT_EQ(read_graph_auto(is), g) << format_name(f);
  }
  // 'c' (n = 36) is a graph6 size byte, not a DIMACS comment.
  const Graph g36 = Graph(36);
  std::istringstream is(encode_graph6(g36) + "\n");
  EXPECT_EQ(read_graph_auto(is), g36);
}

}  // namespace
}  // namespace critfam
