#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sog/blocked_graph.hpp"
#include "sog/coloring.hpp"
#include "sog/representation.hpp"

namespace sog {

struct LayoutConfig {
  /// Length of each overflow path; 0 means |V2| + |V3| of the blocked graph,
  /// any other value must equal it.
  int overflow_length = 0;
  /// Host nodes between consecutive vertex-representative slots on a twig.
  int slot_pitch = 2;
};

/// Named subtrees of the gadget in a blocked representation, kept for audits.
struct GadgetLayout {
  std::optional<NodeId> branching_node;
  std::map<std::string, NodeSet> named;
};

struct CanonicalRepresentation {
  Representation representation;
  BlockedGraph blocked;
  GadgetLayout layout;
};

/// Blocked graph of `g` with parameters (k, 0) represented on a subdivided
/// star with k leaves, where k = c.k. Colour class i lands on the twig of
/// leaf "l<i+1>". Throws DomainError for an improper or partial colouring or
/// mismatched parameters, InternalError if the result fails verification.
CanonicalRepresentation represent_blocked_on_star(const Graph& g, const Coloring& c, const GadgetParams& p,
                                                  const LayoutConfig& cfg = {});

/// Blocked graph with parameters from reduction_params_for_tree(t)
/// represented on a subdivision of `t`. Colour class i lands on the twig of
/// the i-th leaf in label order.
CanonicalRepresentation represent_blocked_on_subdivision(const HostTree& t, const Graph& g, const Coloring& c,
                                                         const LayoutConfig& cfg = {});

/// Gadget-free blocked graph represented by paths on a tree whose centre has
/// degree k and carries one caterpillar leg per colour. The result verifies
/// in both overlap and intersection mode.
CanonicalRepresentation represent_empty_blocked_subpaths(const Graph& g, const Coloring& c, int k);

/// Pairs of same-copy vertex-representatives with adjacent origins whose
/// subtrees meet a common twig of the host. Throws DomainError when labels
/// and `original` disagree or the representation misses a labelled vertex.
std::vector<std::pair<VertexId, VertexId>> find_illegal_pairs(const Representation& rep,
                                                              const BlockedLabels& labels,
                                                              const Graph& original);

}  // namespace sog
