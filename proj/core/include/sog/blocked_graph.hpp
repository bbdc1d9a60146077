#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sog/gadget.hpp"
#include "sog/graph.hpp"
#include "sog/host_tree.hpp"

namespace sog {

enum class Role { VertexRep, EdgeRep, Brother, Gadget };

std::string to_string(Role r);
Role role_from_string(const std::string& s);

inline constexpr char kCopies[] = {'a', 'b', 'c', 'd', 'e', 'f'};

std::string vertex_rep_name(char copy, const VertexId& v);
std::string edge_rep_name(char copy, const Edge& e);
std::string brother_name(char copy, const VertexId& v);

struct BlockedLabels {
  std::map<VertexId, Role> role;
  /// Copy letter of every vertex- and edge-representative.
  std::map<VertexId, char> copy;
  std::map<VertexId, VertexId> vertex_origin;
  std::map<VertexId, Edge> edge_origin;
  /// Vertex-representative -> its brother.
  std::map<VertexId, VertexId> brother_of;
  /// Empty for the gadget-free variant.
  std::map<std::string, VertexId> named;

  std::vector<VertexId> with_role(Role r) const;
  /// Edge-representatives and brothers, sorted.
  std::vector<VertexId> clique_members() const;

  bool operator==(const BlockedLabels&) const = default;
};

struct BlockedGraph {
  Graph graph;
  BlockedLabels labels;
  /// Absent for the gadget-free variant.
  std::optional<GadgetParams> params;
};

/// Six copies of `g` turned into vertex-representatives, one
/// edge-representative per copied edge, one brother per
/// vertex-representative, and the gadget; edge-representatives and brothers
/// form a clique joined to v_s and v_b.
BlockedGraph build_blocked_graph(const Graph& g, const GadgetParams& p);

/// The same construction without the gadget and without the edges to it.
BlockedGraph build_empty_blocked(const Graph& g);

/// Three disjoint copies of `g` with a triangle on the copies of every
/// vertex. Throws DomainError unless `g` is connected with >= 2 vertices.
Graph amplify_3con(const Graph& g);

struct ReductionParams {
  GadgetParams gadget;
  int k = 0;
};

/// Gadget parameters matching a host shape: k is the leafage; a spider uses
/// d = k, u = 0; otherwise d is the least lastbranch degree and u = k - d + 1.
/// Throws DomainError for paths.
ReductionParams reduction_params_for_tree(const HostTree& t);

/// Parameters used when only k is known: d = 3 with u = 0 for k = 3 and
/// u = k - 2 otherwise. Throws DomainError for k < 3.
ReductionParams reduction_params_for_k(int k);

}  // namespace sog
