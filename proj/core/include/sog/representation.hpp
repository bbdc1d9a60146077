#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sog/graph.hpp"
#include "sog/host_tree.hpp"
#include "sog/node_set.hpp"

namespace sog {

/// A connected, non-empty node subset of one particular host tree.
class Subtree {
 public:
  /// Throws DomainError if `nodes` is empty, not connected in `host`, or
  /// sized for a different universe.
  Subtree(std::shared_ptr<const HostTree> host, NodeSet nodes);
  static Subtree from_labels(std::shared_ptr<const HostTree> host, const std::vector<NodeId>& labels);

  const HostTree& host() const { return *host_; }
  const std::shared_ptr<const HostTree>& host_ptr() const { return host_; }
  const NodeSet& nodes() const { return nodes_; }
  std::vector<NodeId> labels() const { return host_->labels_of(nodes_); }
  std::size_t size() const { return nodes_.count(); }
  bool contains(const NodeId& n) const;
  bool is_path() const { return host_->is_path_subset(nodes_); }
  int leaf_count() const { return host_->subtree_leaf_count(nodes_); }

  bool operator==(const Subtree& other) const;

 private:
  std::shared_ptr<const HostTree> host_;
  NodeSet nodes_;
};

enum class SetRelation { Disjoint, Overlap, AContainsB, BContainsA, Equal };
enum class RelationMode { Overlap, Intersection };

std::string to_string(SetRelation r);
std::string to_string(RelationMode m);
RelationMode relation_mode_from_string(const std::string& s);

/// Exact set trichotomy. Throws DomainError when the subtrees live on
/// different hosts.
SetRelation set_relation(const Subtree& a, const Subtree& b);
SetRelation set_relation(const NodeSet& a, const NodeSet& b);

/// Whether a pair in the given relation is an edge of the derived graph.
bool adjacent_under(SetRelation r, RelationMode mode);

/// Host tree plus a subtree for every represented vertex.
class Representation {
 public:
  Representation() = default;
  /// Throws DomainError if any subtree belongs to another host.
  Representation(std::shared_ptr<const HostTree> host, std::map<VertexId, Subtree> assignment);

  const HostTree& host() const { return *host_; }
  const std::shared_ptr<const HostTree>& host_ptr() const { return host_; }
  const std::map<VertexId, Subtree>& assignment() const { return assignment_; }
  const Subtree& subtree(const VertexId& v) const;
  std::vector<VertexId> vertices() const;

 private:
  std::shared_ptr<const HostTree> host_;
  std::map<VertexId, Subtree> assignment_;
};

Graph derive_graph(const Representation& rep, RelationMode mode);

struct PairMismatch {
  VertexId first;
  VertexId second;
  bool expected_edge = false;
  SetRelation actual = SetRelation::Disjoint;
};

struct Verdict {
  bool pass = true;
  std::vector<PairMismatch> mismatches;

  explicit operator bool() const { return pass; }
};

/// Compares the derived graph with `target` pair by pair. Throws DomainError
/// if the represented vertex set differs from the target's.
Verdict verify_representation(const Representation& rep, const Graph& target, RelationMode mode);

/// Nodes common to every subtree in `family`; empty when no such node exists.
NodeSet common_nodes(const std::vector<const Subtree*>& family);

/// True iff every two members of `family` share a node.
bool pairwise_intersecting(const std::vector<const Subtree*>& family);

}  // namespace sog
