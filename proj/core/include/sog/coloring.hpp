#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sog/graph.hpp"

namespace sog {

/// Vertex -> colour index in [0, k). Properness is queried, not enforced.
struct Coloring {
  int k = 0;
  std::map<VertexId, int> colors;

  int color_of(const VertexId& v) const;
  /// Colour classes indexed by colour; empty classes are kept.
  std::vector<std::vector<VertexId>> classes() const;

  bool operator==(const Coloring&) const = default;
};

/// Total on `g`, every colour in [0, k), no monochromatic edge.
bool is_proper(const Graph& g, const Coloring& c);

/// Exact k-colouring by backtracking over vertices in descending-degree
/// order with forward pruning of neighbour domains. Returns nullopt iff no
/// proper k-colouring exists. Throws DomainError when k < 1.
std::optional<Coloring> find_k_coloring(const Graph& g, int k);

/// True iff the two colourings partition the vertices into the same classes.
bool same_up_to_permutation(const Coloring& a, const Coloring& b);

}  // namespace sog
