#pragma once

#include <optional>
#include <vector>

#include "sog/host_tree.hpp"

namespace sog {

/// Maximal induced path of the host that contains a leaf and no node of
/// degree above two. `nodes` runs from the leaf inward; `attachment` is the
/// branching node the twig hangs from (absent when the whole host is a path).
struct Twig {
  std::vector<int> nodes;
  std::optional<int> attachment;

  /// Edges covered by the twig, counting the edge to its attachment.
  int edge_length() const;
  int leaf() const { return nodes.front(); }
};

struct TreeAnalysis {
  std::vector<int> leaves;
  int leafage = 0;
  int max_degree = 0;
  std::vector<int> branching_nodes;
  std::vector<Twig> twigs;
  std::vector<int> lastbranches;
  /// A bare path reports one twig covering every node.
  bool is_path = false;

  /// Index into `twigs` for every host node, -1 off the twigs.
  std::vector<int> twig_of;

  /// Number of twigs hanging from node `v`.
  int twigs_at(int v) const;
};

/// Lastbranches are branching nodes carrying at least degree - 1 twigs,
/// which is exactly the nodes whose removal leaves at most one component
/// that is not a twig.
TreeAnalysis analyze_tree(const HostTree& t);

}  // namespace sog
