#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond its value types, so agreement is meaningful evidence.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sog/graph.hpp"
#include "sog/host_tree.hpp"
#include "sog/node_set.hpp"

namespace oracle {

/// Tries all k^n assignments.
bool colorable(const sog::Graph& g, int k);

/// Smallest vertex set whose removal disconnects the graph or leaves at most
/// one vertex, by trying subsets in increasing size.
int connectivity(const sog::Graph& g);

bool overlap(const std::set<std::string>& a, const std::set<std::string>& b);

/// Every labelled connected graph on vertices "v0".."v<n-1>".
std::vector<sog::Graph> connected_graphs(int n);

sog::Graph random_graph(int n, double p, std::mt19937& rng);

/// Uniform labelled tree on "t0".."t<n-1>" from a random Pruefer code.
sog::HostTree random_tree(int n, std::mt19937& rng);

/// Every labelled tree on "t0".."t<n-1>", decoded from all Pruefer codes.
std::vector<sog::HostTree> all_labelled_trees(int n);

/// Isomorphism by trying every node permutation.
bool isomorphic(const sog::HostTree& a, const sog::HostTree& b);

/// Random connected subset grown from a random node.
sog::NodeSet random_subtree(const sog::HostTree& t, std::mt19937& rng);

/// Graph on "i0".."i<n-1>" where two closed integer intervals are adjacent
/// iff they cross.
sog::Graph interval_overlap_graph(const std::vector<std::pair<int, int>>& intervals);

/// Random interval model with 2n distinct endpoints 0..2n-1.
std::vector<std::pair<int, int>> random_interval_model(int n, std::mt19937& rng);

struct JsonCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool well_formed = false;
};

/// Counts distinct vertices and distinct undirected edges of a graph JSON
/// document, checking endpoints and loops, without the library's reader.
JsonCounts count_graph_json(const std::string& text);

}  // namespace oracle
