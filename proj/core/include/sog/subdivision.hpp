#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sog/host_tree.hpp"
#include "sog/representation.hpp"

namespace sog {

/// A subdivided host together with the map from old node labels to new ones.
struct Subdivision {
  HostTree tree;
  std::map<NodeId, NodeId> node_map;
};

/// Label of the i-th (1-based) node inserted on edge {a, b}; counted from
/// the lexicographically smaller endpoint.
NodeId subdivision_label(const NodeId& a, const NodeId& b, int i);

/// Replaces edge {a, b} by a path with `times` new interior nodes. Old nodes
/// keep their labels. Throws DomainError for a missing edge, times < 1 or a
/// label collision.
Subdivision subdivide(const HostTree& t, const NodeId& a, const NodeId& b, int times);

struct SubdivisionRequest {
  NodeId a;
  NodeId b;
  int times = 1;
};

/// Applies several subdivisions of distinct edges of `t`.
Subdivision subdivide_edges(const HostTree& t, const std::vector<SubdivisionRequest>& requests);

/// For every edge of `original` (as an index pair into `original`), the
/// interior nodes of its image path in `subdivided`, ordered from the
/// smaller-index endpoint. Throws DomainError unless `subdivided` is obtained
/// from `original` by edge subdivision under `node_map`.
std::map<std::pair<int, int>, std::vector<int>> subdivision_paths(
    const HostTree& original, const HostTree& subdivided, const std::map<NodeId, NodeId>& node_map);

/// Membership in SUB(original) with node labels of `original` preserved.
bool is_subdivision_of(const HostTree& subdivided, const HostTree& original);

/// Carries a representation onto a subdivision of its host: every subtree
/// becomes the image of its nodes plus the subdivision nodes interior to the
/// edges it spans. Overlap and intersection graphs are unchanged.
Representation lift_representation(const Representation& rep,
                                   std::shared_ptr<const HostTree> subdivided,
                                   const std::map<NodeId, NodeId>& node_map);

}  // namespace sog
