#pragma once

#include <optional>
#include <string>

#include "sog/graph.hpp"
#include "sog/host_tree.hpp"
#include "sog/node_set.hpp"

namespace sog::dot {

std::string write_graph(const Graph& g, const std::string& name = "G");

/// Host in black; nodes of `highlight`, when given, filled red.
std::string write_tree(const HostTree& t, const std::optional<NodeSet>& highlight = std::nullopt,
                       const std::string& name = "T");

}  // namespace sog::dot
