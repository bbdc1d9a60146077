#pragma once

#include <map>

#include "sog/blocked_graph.hpp"
#include "sog/coloring.hpp"
#include "sog/representation.hpp"

namespace sog {

struct DecodedColoring {
  /// Copy whose vertex-representatives were read.
  char copy = 0;
  Coloring coloring;
  /// Colour -> identifier of the twig (its leaf) or component (the centre's
  /// neighbour) carrying that colour.
  std::map<int, NodeId> witnesses;
};

/// Reads a k-colouring of `original` off a representation of its blocked
/// graph. With gadget labels, looks for the first copy whose
/// vertex-representatives each lie inside one twig with no illegal pair;
/// twigs become colours. Without them, takes the common node of all
/// edge-representatives and brothers (highest degree, then smallest label)
/// and uses the components around it as colours. Throws NoNiceCopyError when
/// nothing decodes, DomainError when labels and graph disagree.
DecodedColoring decode_coloring(const Representation& rep, const BlockedLabels& labels, const Graph& original, int k);

}  // namespace sog
