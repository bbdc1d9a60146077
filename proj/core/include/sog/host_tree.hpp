#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sog/graph.hpp"
#include "sog/node_set.hpp"

namespace sog {

using NodeId = std::string;

/// A finite tree with string-labelled nodes. Node indices follow sorted
/// label order and are stable for the lifetime of the value.
class HostTree {
 public:
  HostTree() = default;

  /// Throws DomainError unless the lists describe a non-empty tree
  /// (|edges| = |nodes| - 1, connected, no loops or duplicates).
  static HostTree from_lists(const std::vector<NodeId>& nodes,
                             const std::vector<std::pair<NodeId, NodeId>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<NodeId>& nodes() const { return names_; }
  const NodeId& name(int i) const { return names_.at(i); }
  int index_of(const NodeId& n) const;
  std::optional<int> find(const NodeId& n) const;

  const std::vector<int>& neighbors(int i) const { return adjacency_.at(i); }
  int degree(int i) const { return static_cast<int>(adjacency_.at(i).size()); }
  bool has_edge(int a, int b) const;
  /// Edges as index pairs with first < second, sorted.
  std::vector<std::pair<int, int>> edges() const;
  /// Edges as label pairs, each with the smaller label first, sorted.
  std::vector<std::pair<NodeId, NodeId>> named_edges() const;

  /// The unique path from a to b, both ends included.
  std::vector<int> path_between(int a, int b) const;

  NodeSet empty_set() const { return NodeSet(names_.size()); }
  NodeSet full_set() const;
  NodeSet set_of(const std::vector<NodeId>& labels) const;
  std::vector<NodeId> labels_of(const NodeSet& s) const;

  /// True iff `s` is non-empty and induces a connected subgraph.
  bool is_connected_subset(const NodeSet& s) const;
  /// Leaves of the subtree induced by `s` (a single node counts as one leaf).
  int subtree_leaf_count(const NodeSet& s) const;
  /// Nodes of `s` with a neighbour outside `s`.
  int boundary_node_count(const NodeSet& s) const;
  /// True iff the induced subgraph of `s` is a path (max degree two).
  bool is_path_subset(const NodeSet& s) const;

  Graph as_graph() const;

  bool operator==(const HostTree& other) const {
    return names_ == other.names_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<NodeId> names_;
  std::map<NodeId, int> index_;
  std::vector<std::vector<int>> adjacency_;
};

// Small named trees.
namespace trees {
HostTree path(int nodes, const std::string& prefix = "n");
/// Star K_{1,leaves}: centre "c", leaves "l1".."l<leaves>".
HostTree star(int leaves);
/// Two adjacent centres "c1", "c2", each carrying `leaves_each` pendant leaves.
HostTree double_star(int leaves_each);
/// Centre "c" with one leg per entry of `legs`, leg i having legs[i] nodes.
HostTree spider(const std::vector<int>& legs);
}  // namespace trees

}  // namespace sog
