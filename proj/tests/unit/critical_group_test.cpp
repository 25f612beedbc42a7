#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "critgroup/critical_group.hpp"
#include "critgroup/decomposition.hpp"
#include "critgroup/error.hpp"
#include "critgroup/families.hpp"
#include "critgroup/smith.hpp"
#include "critgroup/transforms.hpp"
#include "test_graphs.hpp"

using namespace critgroup;

namespace {

FiniteAbelianGroup parse_group(const std::string& text) {
  std::vector<BigInt> orders;
  if (text != "-") {
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) orders.emplace_back(tok);
  }
  return FiniteAbelianGroup::from_cyclic_orders(std::move(orders));
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(' ');
  const auto b = s.find_last_not_of(' ');
  return s.substr(a, b - a + 1);
}

// Spanning trees by brute force over edge subsets of size n - 1.
long count_trees(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != n - 1) continue;
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if (mask & (1u << e)) edges.push_back(e);
    }
    if (is_spanning_tree(g, edges)) ++count;
  }
  return count;
}

}  // namespace

// Fixtures come from networkx + sympy (tests/fixtures/gen_oracle.py).
TEST(CriticalGroup, MatchesIndependentOracle) {
  std::ifstream in(CRITGROUP_FIXTURES "/oracle_groups.txt");
  ASSERT_TRUE(in);
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, '|');) cols.push_back(trim(c));
    ASSERT_EQ(cols.size(), 5u) << line;
    const Graph g = critgroup::testing::graph_from_descriptor(cols[0]);
    EXPECT_EQ(critical_group(g), parse_group(cols[1])) << cols[0];
    EXPECT_EQ(critical_group(line_graph(g)), parse_group(cols[2])) << "L " << cols[0];
    EXPECT_EQ(critical_group(subdivision(g)), parse_group(cols[3])) << "sd " << cols[0];
    EXPECT_EQ(spanning_forest_count(g), BigInt(cols[4])) << cols[0];
    ++rows;
  }
  EXPECT_GE(rows, 50);
}

TEST(CriticalGroup, OrderIsTreeCount) {
  for (const auto& g : critgroup::testing::enumerated(5)) {
    const long trees = count_trees(g.graph);
    EXPECT_EQ(spanning_forest_count(g.graph), trees) << g.name;
    EXPECT_EQ(critical_group(g.graph).order(), trees) << g.name;
  }
}

TEST(CriticalGroup, RoutesAgree) {
  for (const char* spec : {"petersen", "cube:4", "complete:6", "complete-bipartite:3,5",
                           "icosahedron"}) {
    const Graph g = generate_from_spec(spec);
    const auto a = critical_group(g, CriticalGroupRoute::ReducedLaplacian);
    EXPECT_EQ(a, critical_group(g, CriticalGroupRoute::CycleGram)) << spec;
    EXPECT_EQ(a, critical_group(g, CriticalGroupRoute::EdgeSpace)) << spec;
  }
}

TEST(CriticalGroup, Forests) {
  // K_3 plus K_2 plus an isolated vertex: the group is per component.
  const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  EXPECT_EQ(critical_group(g).invariant_factors(), std::vector<BigInt>{3});
  EXPECT_EQ(spanning_forest_count(g), 3);
  EXPECT_EQ(default_omit_set(g), (std::vector<int>{0, 3, 5}));
  EXPECT_THROW(reduced_laplacian(g, {0, 1, 5}), Error);
  EXPECT_THROW(reduced_laplacian(g, {0, 3}), Error);
  EXPECT_TRUE(critical_group(Graph(1, {})).is_trivial());
}

TEST(CriticalGroup, BondsAndCyclesAreOrthogonalBases) {
  for (const auto& g : critgroup::testing::enumerated(5)) {
    const auto f = canonical_spanning_forest(g.graph);
    const BondCycleBases b = bond_and_cycle_bases(g.graph, f);
    EXPECT_TRUE((b.bonds.transpose() * b.cycles).is_zero()) << g.name;
    EXPECT_TRUE((boundary_matrix(g.graph) * b.cycles).is_zero()) << g.name;
    EXPECT_EQ(b.cycles.cols(), static_cast<std::size_t>(beta(g.graph)));
  }
  EXPECT_THROW(bond_and_cycle_bases(cycle_graph(3), {0, 1, 2}), Error);
}

TEST(CriticalGroup, Presentations) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(vertex_presentation(k4, 2).group(), critical_group(k4));
  const Presentation e = edge_space_presentation(k4);
  EXPECT_EQ(e.bonds().cols(), 3u);
  EXPECT_EQ(e.cycles().cols(), 3u);
  EXPECT_EQ(e.group(), critical_group(k4));
  const FiniteAbelianGroup lk4 = critical_group(line_graph(k4));
  for (int e0 = 0; e0 < k4.edge_count(); ++e0) EXPECT_EQ(line_presentation(k4, e0).group(), lk4);
  EXPECT_THROW(line_presentation(Graph(4, {{0, 1}, {2, 3}}), 0), Error);
  EXPECT_THROW(line_presentation(Graph(1, {}), 0), Error);
  EXPECT_THROW(line_presentation(k4, 6), Error);
}

TEST(CriticalGroup, SpecExamples) {
  EXPECT_EQ(critical_group(complete_graph(4)).invariant_factors(), (std::vector<BigInt>{4, 4}));
  EXPECT_EQ(spanning_forest_count(cube_graph(3)), 384);
  EXPECT_EQ(degree_sum_gcd(complete_bipartite_graph(2, 3)), 5);
  EXPECT_EQ(degree_sum_gcd(star_graph(3)), 4);
  EXPECT_EQ(k_of_p(star_graph(3), BigInt(2)), 2u);
  EXPECT_EQ(k_of_p(complete_graph(5), BigInt(2)), 3u);
  EXPECT_EQ(k_of_p(complete_graph(5), BigInt(3)), 0u);
}

TEST(CriticalGroup, VertexPresentationIndependentOfV0) {
  for (const auto& g : critgroup::testing::enumerated(5)) {
    const FiniteAbelianGroup k = critical_group(g.graph);
    for (int v0 = 0; v0 < g.graph.vertex_count(); ++v0) {
      EXPECT_EQ(vertex_presentation(g.graph, v0).group(), k) << g.name << " v0=" << v0;
    }
  }
}
