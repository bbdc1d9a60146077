#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sog/coloring.hpp"
#include "sog/connectivity.hpp"
#include "sog/errors.hpp"
#include "sog/graph.hpp"

using namespace sog;

TEST(Graph, RejectsLoopsDuplicatesAndDanglingEdges) {
  EXPECT_THROW(Graph::from_lists({"a", "a"}, {}), DomainError);
  EXPECT_THROW(Graph::from_lists({"a"}, {{"a", "a"}}), DomainError);
  EXPECT_THROW(Graph::from_lists({"a", "b"}, {{"a", "b"}, {"b", "a"}}), DomainError);
  EXPECT_THROW(Graph::from_lists({"a"}, {{"a", "b"}}), DomainError);
}

TEST(Graph, EdgesAreNormalisedAndSorted) {
  Graph g = Graph::from_lists({"z", "a", "m"}, {{"z", "a"}, {"m", "a"}});
  auto es = g.edges();
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(es[0], Edge("a", "m"));
  EXPECT_EQ(es[1], Edge("a", "z"));
  EXPECT_EQ(g.vertices(), (std::vector<VertexId>{"a", "m", "z"}));
}

TEST(Graph, LabelledEquality) {
  Graph xy = Graph::from_lists({"x", "y"}, {{"x", "y"}});
  EXPECT_TRUE(graphs_equal(xy, Graph::from_lists({"y", "x"}, {{"y", "x"}})));
  EXPECT_FALSE(graphs_equal(xy, Graph::from_lists({"x", "z"}, {{"x", "z"}})));
  EXPECT_FALSE(graphs_equal(named::cycle(4), named::path(4)));
}

TEST(Graph, InducedSubgraphKeepsOnlyInternalEdges) {
  Graph g = named::complete(4).induced({"v0", "v1", "v2"});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Connectivity, SmallNamedGraphs) {
  EXPECT_EQ(vertex_connectivity(named::complete(4)), 3);
  EXPECT_EQ(vertex_connectivity(named::path(3)), 1);
  EXPECT_EQ(vertex_connectivity(named::prism()), 3);
  EXPECT_EQ(vertex_connectivity(named::cycle(6)), 2);
  EXPECT_EQ(vertex_connectivity(Graph::from_lists({"a", "b"}, {})), 0);
  EXPECT_THROW(vertex_connectivity(Graph::from_lists({"a"}, {})), DomainError);
}

TEST(Connectivity, AgreesWithSubsetRemovalOnRandomGraphs) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(2, 9);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(size(rng), density(rng), rng);
    ASSERT_EQ(vertex_connectivity(g), oracle::connectivity(g)) << "trial " << trial;
  }
}

TEST(Coloring, SmallNamedGraphs) {
  EXPECT_FALSE(find_k_coloring(named::complete(4), 3).has_value());
  auto bip = find_k_coloring(named::complete_bipartite(3, 3), 2);
  ASSERT_TRUE(bip.has_value());
  EXPECT_TRUE(is_proper(named::complete_bipartite(3, 3), *bip));
  EXPECT_EQ(bip->color_of("a0"), bip->color_of("a2"));
  EXPECT_NE(bip->color_of("a0"), bip->color_of("b1"));
  auto prism = find_k_coloring(named::prism(), 3);
  ASSERT_TRUE(prism.has_value());
  EXPECT_TRUE(is_proper(named::prism(), *prism));
  EXPECT_TRUE(oracle::colorable(named::prism(), 3));
  EXPECT_THROW(find_k_coloring(named::prism(), 0), DomainError);
}

TEST(Coloring, ProperAndMonotoneOnRandomGraphs) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(size(rng), density(rng), rng);
    for (int k = 1; k <= 5; ++k) {
      auto c = find_k_coloring(g, k);
      ASSERT_EQ(c.has_value(), oracle::colorable(g, k)) << "trial " << trial << " k " << k;
      if (c) {
        EXPECT_TRUE(is_proper(g, *c));
        for (const auto& [v, colour] : c->colors) EXPECT_LT(colour, k);
      } else if (k > 1) {
        EXPECT_FALSE(find_k_coloring(g, k - 1).has_value());
      }
    }
  }
}

TEST(Coloring, PermutationEquivalence) {
  Coloring a{2, {{"x", 0}, {"y", 1}, {"z", 0}}};
  Coloring b{2, {{"x", 1}, {"y", 0}, {"z", 1}}};
  Coloring c{2, {{"x", 1}, {"y", 0}, {"z", 0}}};
  EXPECT_TRUE(same_up_to_permutation(a, b));
  EXPECT_FALSE(same_up_to_permutation(a, c));
}

TEST(Coloring, PropernessNeedsTotalInRangeAssignment) {
  Graph g = named::path(2);
  EXPECT_FALSE(is_proper(g, Coloring{2, {{"v0", 0}}}));
  EXPECT_FALSE(is_proper(g, Coloring{2, {{"v0", 0}, {"v1", 2}}}));
  EXPECT_FALSE(is_proper(g, Coloring{2, {{"v0", 1}, {"v1", 1}}}));
  EXPECT_TRUE(is_proper(g, Coloring{2, {{"v0", 1}, {"v1", 0}}}));
}
