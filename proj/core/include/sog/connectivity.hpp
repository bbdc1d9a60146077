#pragma once

#include "sog/graph.hpp"

namespace sog {

/// Exact vertex connectivity: the fewest vertices whose removal disconnects
/// `g` or leaves a single vertex. Computed from unit-capacity max-flow on the
/// vertex-split digraph over every non-adjacent pair (Menger); complete
/// graphs on n vertices return n - 1.
///
/// Throws DomainError for graphs with fewer than two vertices.
int vertex_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
int local_vertex_connectivity(const IndexedGraph& g, int s, int t);

int min_degree(const Graph& g);

}  // namespace sog
