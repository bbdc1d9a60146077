#pragma once

#include <map>
#include <string>
#include <vector>

#include "sog/graph.hpp"

namespace sog {

struct GadgetParams {
  int d = 3;
  int u = 0;
  /// Internal vertices on every gadget path. The constructions assume 3;
  /// other values exist only for experiments with the gadget itself.
  int path_internal = 3;

  /// Throws DomainError unless d >= 3, u == 0 or u >= 2, path_internal >= 1.
  void validate() const;
  bool operator==(const GadgetParams&) const = default;
};

/// The blocking gadget: v_s and v_b joined by d disjoint paths; when u >= 2
/// an extra v_s' is joined by u disjoint paths to v_b', the middle internal
/// vertex of the first main path.
struct Gadget {
  Graph graph;
  /// Keys "vs", "vb", "vb_prime" and, when u >= 2, "vs_prime".
  std::map<std::string, VertexId> named;
  /// Internal vertices of each main path, ordered from v_s to v_b.
  std::vector<std::vector<VertexId>> main_paths;
  /// Internal vertices of each side path, ordered from v_s' to v_b'.
  std::vector<std::vector<VertexId>> side_paths;
};

Gadget build_gadget(const GadgetParams& p);

}  // namespace sog
