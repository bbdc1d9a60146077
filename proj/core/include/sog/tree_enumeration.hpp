#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sog/host_tree.hpp"
#include "sog/node_set.hpp"

namespace sog {

/// Isomorphism-invariant string for an unlabelled tree (rooted at its
/// centre, or the smaller of the two rootings when bicentral).
std::string canonical_form(const HostTree& t);

/// Same, with the nodes of `marked` distinguished. Two marked trees get equal
/// strings iff some isomorphism maps one marked set onto the other.
std::string canonical_form(const HostTree& t, const NodeSet& marked);

/// One tree per isomorphism class on exactly `n` nodes, ordered by canonical
/// form. Nodes are labelled "n0".."n<n-1>" in breadth-first order from a
/// centre.
std::vector<HostTree> free_trees(int n);

/// Every connected node subset of `t` as a bitmask over node indices.
/// Throws DomainError when `t` has more than 63 nodes or the subset count
/// exceeds `limit`.
std::vector<std::uint64_t> connected_subsets(const HostTree& t, std::size_t limit = std::size_t{1} << 22);

NodeSet mask_to_set(const HostTree& t, std::uint64_t mask);

}  // namespace sog
