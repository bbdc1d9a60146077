#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sog/blocked_graph.hpp"
#include "sog/coloring.hpp"
#include "sog/connectivity.hpp"
#include "sog/errors.hpp"
#include "sog/gadget.hpp"
#include "sog/subdivision.hpp"

using namespace sog;

namespace {

int components(const Graph& g) {
  std::set<VertexId> seen;
  int count = 0;
  for (const auto& start : g.vertices()) {
    if (seen.contains(start)) continue;
    ++count;
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& w : g.neighbors(v))
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return count;
}

std::set<VertexId> set_of(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

Graph without(const Graph& g, const std::set<VertexId>& drop) {
  std::set<VertexId> keep;
  for (const auto& v : g.vertices())
    if (!drop.contains(v)) keep.insert(v);
  return g.induced(keep);
}

}  // namespace

TEST(Gadget, ValidatesParameters) {
  EXPECT_THROW(build_gadget({2, 0}), DomainError);
  EXPECT_THROW(build_gadget({3, 1}), DomainError);
  EXPECT_THROW(build_gadget({3, 0, 0}), DomainError);
  EXPECT_NO_THROW(build_gadget({3, 2}));
}

TEST(Gadget, ClosedFormCounts) {
  Gadget g30 = build_gadget({3, 0});
  EXPECT_EQ(g30.graph.vertex_count(), 11u);
  EXPECT_EQ(g30.graph.edge_count(), 12u);
  EXPECT_FALSE(g30.named.contains("vs_prime"));

  Gadget g34 = build_gadget({3, 4});
  EXPECT_EQ(g34.graph.vertex_count(), 24u);
  EXPECT_EQ(g34.graph.edge_count(), 28u);

  for (int d = 3; d <= 6; ++d)
    for (int u : {0, 2, 3, 5}) {
      Gadget g = build_gadget({d, u});
      std::size_t vertices = u == 0 ? 2 + 3 * d : 3 + 3 * d + 3 * u;
      std::size_t edges = u == 0 ? 4 * d : 4 * d + 4 * u;
      EXPECT_EQ(g.graph.vertex_count(), vertices) << d << "," << u;
      EXPECT_EQ(g.graph.edge_count(), edges) << d << "," << u;
    }
}

TEST(Gadget, NamedVerticesAndPaths) {
  Gadget g = build_gadget({4, 2});
  ASSERT_EQ(g.main_paths.size(), 4u);
  ASSERT_EQ(g.side_paths.size(), 2u);
  EXPECT_EQ(g.named.at("vb_prime"), g.main_paths[0][1]);
  for (const auto& p : g.main_paths) {
    ASSERT_EQ(p.size(), 3u);
    EXPECT_TRUE(g.graph.has_edge(g.named.at("vs"), p.front()));
    EXPECT_TRUE(g.graph.has_edge(p[0], p[1]));
    EXPECT_TRUE(g.graph.has_edge(p[1], p[2]));
    EXPECT_TRUE(g.graph.has_edge(p.back(), g.named.at("vb")));
  }
  for (const auto& p : g.side_paths) {
    EXPECT_TRUE(g.graph.has_edge(g.named.at("vs_prime"), p.front()));
    EXPECT_TRUE(g.graph.has_edge(p.back(), g.named.at("vb_prime")));
  }
}

TEST(Gadget, ZeroVariantIsInducedSubgraph) {
  Gadget small = build_gadget({3, 0});
  Gadget big = build_gadget({3, 4});
  std::set<VertexId> keep{big.named.at("vs"), big.named.at("vb")};
  for (const auto& p : big.main_paths) keep.insert(p.begin(), p.end());
  EXPECT_TRUE(graphs_equal(big.graph.induced(keep), small.graph));
}

TEST(Gadget, RemovingHubsLeavesThreeVertexPaths) {
  for (int d = 3; d <= 5; ++d)
    for (int u : {0, 2, 4}) {
      Gadget g = build_gadget({d, u});
      std::set<VertexId> hubs{g.named.at("vs"), g.named.at("vb")};
      if (u > 0) hubs.insert(g.named.at("vs_prime"));
      Graph rest = without(g.graph, hubs);
      if (u == 0) {
        EXPECT_EQ(components(rest), d);
        EXPECT_EQ(rest.edge_count(), 2u * d);
      } else {
        // v_b' stays behind and ties the side paths to the first main path.
        Graph cut = without(rest, {g.named.at("vb_prime")});
        EXPECT_EQ(components(cut), d + 1 + u);
      }
    }
}

TEST(Amplify, Examples) {
  Graph p2 = amplify_3con(named::path(2));
  EXPECT_EQ(p2.vertex_count(), 6u);
  EXPECT_EQ(p2.edge_count(), 9u);
  Graph c5 = amplify_3con(named::cycle(5));
  EXPECT_EQ(c5.vertex_count(), 15u);
  EXPECT_EQ(c5.edge_count(), 30u);
  // Three copies of C5 with a triangle per vertex form the 4-regular C5 x K3.
  EXPECT_EQ(vertex_connectivity(c5), 4);
  EXPECT_EQ(oracle::connectivity(c5), 4);
  EXPECT_GE(min_degree(c5), 3);
  EXPECT_THROW(amplify_3con(Graph::from_lists({"a", "b"}, {})), DomainError);
  EXPECT_THROW(amplify_3con(Graph::from_lists({"a"}, {})), DomainError);
}

TEST(Amplify, ThreeConnectedAndColourEquivalentOnSmallGraphs) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::connected_graphs(n)) {
      Graph a = amplify_3con(g);
      ASSERT_EQ(a.vertex_count(), 3 * g.vertex_count());
      ASSERT_EQ(a.edge_count(), 3 * g.edge_count() + 3 * g.vertex_count());
      ASSERT_GE(vertex_connectivity(a), 3);
      ASSERT_GE(min_degree(a), 3);
      for (int k : {3, 4})
        ASSERT_EQ(find_k_coloring(a, k).has_value(), find_k_coloring(g, k).has_value());
    }
}

TEST(Amplify, SixVertexInputsStayThreeConnected) {
  std::mt19937 rng(6);
  int checked = 0;
  while (checked < 60) {
    Graph g = oracle::random_graph(6, 0.4, rng);
    if (!is_connected(g)) continue;
    ++checked;
    Graph a = amplify_3con(g);
    EXPECT_GE(vertex_connectivity(a), 3);
    EXPECT_GE(min_degree(a), 3);
  }
}

TEST(Blocked, K4Counts) {
  BlockedGraph b = build_blocked_graph(named::complete(4), {3, 0});
  EXPECT_EQ(b.graph.vertex_count(), 95u);
  EXPECT_EQ(b.graph.edge_count(), 1998u);
  EXPECT_EQ(b.labels.with_role(Role::VertexRep).size(), 24u);
  EXPECT_EQ(b.labels.with_role(Role::EdgeRep).size(), 36u);
  EXPECT_EQ(b.labels.with_role(Role::Brother).size(), 24u);
  EXPECT_EQ(b.labels.with_role(Role::Gadget).size(), 11u);
}

TEST(Blocked, PrismRoleSizes) {
  GadgetParams p{3, 2};
  BlockedGraph b = build_blocked_graph(named::prism(), p);
  EXPECT_EQ(b.labels.with_role(Role::VertexRep).size(), 36u);
  EXPECT_EQ(b.labels.with_role(Role::EdgeRep).size(), 54u);
  EXPECT_EQ(b.labels.with_role(Role::Brother).size(), 36u);
  EXPECT_EQ(b.labels.with_role(Role::Gadget).size(), std::size_t(3 + 3 * p.d + 3 * p.u));
  EXPECT_EQ(b.labels.role.size(), b.graph.vertex_count());
}

TEST(Blocked, StructureOfEdgeClasses) {
  GadgetParams p{3, 0};
  Graph g = named::prism();
  BlockedGraph b = build_blocked_graph(g, p);
  const auto& L = b.labels;
  auto v1 = L.with_role(Role::VertexRep);
  auto clique = L.clique_members();
  EXPECT_EQ(b.graph.induced(set_of(v1)).edge_count(), 0u);
  EXPECT_EQ(b.graph.induced(set_of(clique)).edge_count(), clique.size() * (clique.size() - 1) / 2);
  EXPECT_TRUE(graphs_equal(b.graph.induced(set_of(L.with_role(Role::Gadget))), build_gadget(p).graph));

  std::size_t N = clique.size();
  for (const auto& e : L.with_role(Role::EdgeRep)) {
    EXPECT_EQ(b.graph.degree(e), (N - 1) + 2 + 2);
    const Edge& origin = L.edge_origin.at(e);
    char copy = L.copy.at(e);
    EXPECT_TRUE(b.graph.has_edge(e, vertex_rep_name(copy, origin.first)));
    EXPECT_TRUE(b.graph.has_edge(e, vertex_rep_name(copy, origin.second)));
  }
  std::set<VertexId> brothers;
  for (const auto& [v, br] : L.brother_of) {
    EXPECT_EQ(L.role.at(v), Role::VertexRep);
    EXPECT_EQ(L.role.at(br), Role::Brother);
    EXPECT_TRUE(b.graph.has_edge(v, br));
    brothers.insert(br);
  }
  EXPECT_EQ(brothers.size(), L.with_role(Role::Brother).size());
  EXPECT_EQ(L.brother_of.size(), v1.size());
}

TEST(Blocked, EmptyVariantCounts) {
  BlockedGraph b = build_empty_blocked(named::path(2));
  EXPECT_EQ(b.graph.vertex_count(), 30u);
  EXPECT_EQ(b.graph.edge_count(), 177u);
  EXPECT_TRUE(b.labels.named.empty());
  EXPECT_FALSE(b.params.has_value());
  EXPECT_EQ(b.graph.induced(set_of(b.labels.with_role(Role::VertexRep))).edge_count(), 0u);
}

TEST(Blocked, EmptyVariantIsBlockedMinusGadget) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Graph> graphs = oracle::connected_graphs(n);
    graphs.push_back(Graph::from_lists([&] {
      std::vector<VertexId> vs;
      for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
      return vs;
    }(), {}));
    for (const Graph& g : graphs) {
      BlockedGraph full = build_blocked_graph(g, {3, 0});
      BlockedGraph empty = build_empty_blocked(g);
      Graph stripped = without(full.graph, set_of(full.labels.with_role(Role::Gadget)));
      ASSERT_TRUE(graphs_equal(stripped, empty.graph));
      BlockedLabels stripped_labels = full.labels;
      for (const auto& v : full.labels.with_role(Role::Gadget)) stripped_labels.role.erase(v);
      stripped_labels.named.clear();
      ASSERT_EQ(stripped_labels, empty.labels);
    }
  }
}

TEST(ReductionParams, ForTrees) {
  ReductionParams star = reduction_params_for_tree(trees::star(3));
  EXPECT_EQ(star.k, 3);
  EXPECT_EQ(star.gadget, (GadgetParams{3, 0}));

  ReductionParams ds = reduction_params_for_tree(trees::double_star(2));
  EXPECT_EQ(ds.k, 4);
  EXPECT_EQ(ds.gadget, (GadgetParams{3, 2}));

  ReductionParams spider = reduction_params_for_tree(trees::spider({1, 2, 3, 1, 2}));
  EXPECT_EQ(spider.k, 5);
  EXPECT_EQ(spider.gadget, (GadgetParams{5, 0}));

  // Lastbranches of degree 3 and 4 joined by a long edge.
  HostTree mixed = subdivide(HostTree::from_lists({"x", "y", "x1", "x2", "y1", "y2", "y3"},
                                                  {{"x", "y"}, {"x", "x1"}, {"x", "x2"}, {"y", "y1"}, {"y", "y2"}, {"y", "y3"}}),
                             "x", "y", 3)
                        .tree;
  ReductionParams m = reduction_params_for_tree(mixed);
  EXPECT_EQ(m.k, 5);
  EXPECT_EQ(m.gadget, (GadgetParams{3, 3}));

  EXPECT_THROW(reduction_params_for_tree(trees::path(4)), DomainError);
}

TEST(ReductionParams, ForK) {
  EXPECT_EQ(reduction_params_for_k(3).gadget, (GadgetParams{3, 0}));
  EXPECT_EQ(reduction_params_for_k(4).gadget, (GadgetParams{3, 2}));
  EXPECT_EQ(reduction_params_for_k(6).gadget, (GadgetParams{3, 4}));
  EXPECT_THROW(reduction_params_for_k(2), DomainError);
}
