#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sog {

using VertexId = std::string;

/// Unordered vertex pair, stored with the lexicographically smaller endpoint first.
struct Edge {
  VertexId first;
  VertexId second;

  Edge() = default;
  Edge(VertexId a, VertexId b);

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

/// Finite simple graph on string-labelled vertices.
///
/// Vertices and neighbourhoods are kept sorted, so every traversal the
/// library performs is deterministic. Mutation is limited to growing the
/// graph; the constructions build a graph once and then treat it as a value.
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError on duplicate vertices, self-loops, duplicate edges or
  /// dangling endpoints.
  static Graph from_lists(const std::vector<VertexId>& vertices,
                          const std::vector<std::pair<VertexId, VertexId>>& edges);

  void add_vertex(const VertexId& v);
  void add_edge(const VertexId& a, const VertexId& b);

  bool has_vertex(const VertexId& v) const { return adjacency_.contains(v); }
  bool has_edge(const VertexId& a, const VertexId& b) const;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  const std::set<VertexId>& neighbors(const VertexId& v) const;
  std::size_t degree(const VertexId& v) const { return neighbors(v).size(); }

  Graph induced(const std::set<VertexId>& keep) const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::map<VertexId, std::set<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Labelled equality: identical vertex sets and identical edge sets.
bool graphs_equal(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// Dense index view used by the exact algorithms. Index order is the sorted
/// vertex order of the source graph.
struct IndexedGraph {
  std::vector<VertexId> names;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::vector<bool>> matrix;

  explicit IndexedGraph(const Graph& g);
  int size() const { return static_cast<int>(names.size()); }
};

// Small named graphs used by tests, benchmarks and the CLI.
namespace named {
Graph complete(int n, const std::string& prefix = "v");
Graph path(int n, const std::string& prefix = "v");
Graph cycle(int n, const std::string& prefix = "v");
Graph complete_bipartite(int a, int b);
/// Triangular prism C3 x K2.
Graph prism();
/// Hub joined to every vertex of a rim cycle with `rim` vertices.
Graph wheel(int rim);
}  // namespace named

}  // namespace sog
