#pragma once

#include <string>

#include "sog/blocked_graph.hpp"
#include "sog/coloring.hpp"
#include "sog/graph.hpp"
#include "sog/host_tree.hpp"
#include "sog/representation.hpp"
#include "sog/tree_analysis.hpp"

// Text-level JSON codecs. Readers throw ParseError for malformed JSON or a
// wrong document shape (with 1-based line and column when the JSON itself is
// broken) and DomainError when a well-formed document describes an invalid
// object. Writers emit two-space indented JSON with sorted keys.
namespace sog::json {

Graph read_graph(const std::string& text);
std::string write_graph(const Graph& g);

HostTree read_tree(const std::string& text);
std::string write_tree(const HostTree& t);

Representation read_representation(const std::string& text);
std::string write_representation(const Representation& rep);

/// Accepts either a blocked-graph document or a bare labels object.
BlockedLabels read_labels(const std::string& text);
std::string write_labels(const BlockedLabels& labels);

BlockedGraph read_blocked(const std::string& text);
std::string write_blocked(const BlockedGraph& b);

Coloring read_coloring(const std::string& text);
std::string write_coloring(const Coloring& c);

std::string write_analysis(const HostTree& t, const TreeAnalysis& a);

}  // namespace sog::json
