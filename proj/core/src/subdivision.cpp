#include "sog/subdivision.hpp"

#include <set>

#include "sog/errors.hpp"

namespace sog {

NodeId subdivision_label(const NodeId& a, const NodeId& b, int i) {
  const auto& lo = a < b ? a : b;
  const auto& hi = a < b ? b : a;
  return "origEdge(" + lo + "," + hi + ")#" + std::to_string(i);
}

Subdivision subdivide(const HostTree& t, const NodeId& a, const NodeId& b, int times) {
  return subdivide_edges(t, {{a, b, times}});
}

Subdivision subdivide_edges(const HostTree& t, const std::vector<SubdivisionRequest>& requests) {
  std::set<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : t.named_edges()) edges.insert(e);
  std::vector<NodeId> nodes = t.nodes();
  std::set<NodeId> taken(nodes.begin(), nodes.end());

  for (const auto& r : requests) {
    if (r.times < 1) throw DomainError("subdivision count must be positive");
    auto key = r.a < r.b ? std::make_pair(r.a, r.b) : std::make_pair(r.b, r.a);
    if (!edges.erase(key)) throw DomainError("edge (" + r.a + ", " + r.b + ") is not in the host");
    NodeId previous = key.first;
    for (int i = 1; i <= r.times; ++i) {
      NodeId fresh = subdivision_label(key.first, key.second, i);
      if (!taken.insert(fresh).second) throw DomainError("subdivision label '" + fresh + "' already in use");
      nodes.push_back(fresh);
      edges.emplace(std::min(previous, fresh), std::max(previous, fresh));
      previous = fresh;
    }
    edges.emplace(std::min(previous, key.second), std::max(previous, key.second));
  }

  Subdivision out;
  out.tree = HostTree::from_lists(nodes, {edges.begin(), edges.end()});
  for (const auto& n : t.nodes()) out.node_map[n] = n;
  return out;
}

std::map<std::pair<int, int>, std::vector<int>> subdivision_paths(
    const HostTree& original, const HostTree& subdivided, const std::map<NodeId, NodeId>& node_map) {
  std::vector<int> image(original.size());
  std::vector<bool> is_image(subdivided.size(), false);
  for (int i = 0; i < original.size(); ++i) {
    auto it = node_map.find(original.name(i));
    if (it == node_map.end()) throw DomainError("node map misses '" + original.name(i) + "'");
    auto j = subdivided.find(it->second);
    if (!j) throw DomainError("node map target '" + it->second + "' is not in the subdivided host");
    if (is_image[*j]) throw DomainError("node map is not injective");
    is_image[*j] = true;
    image[i] = *j;
  }

  std::map<std::pair<int, int>, std::vector<int>> out;
  std::vector<bool> covered(subdivided.size(), false);
  for (auto [a, b] : original.edges()) {
    auto path = subdivided.path_between(image[a], image[b]);
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    for (int v : interior) {
      if (is_image[v] || subdivided.degree(v) != 2 || covered[v])
        throw DomainError("host is not a subdivision of the original under the node map");
      covered[v] = true;
    }
    out[{a, b}] = std::move(interior);
  }
  for (int v = 0; v < subdivided.size(); ++v)
    if (!is_image[v] && !covered[v])
      throw DomainError("subdivided host has node '" + subdivided.name(v) + "' outside every edge image");
  return out;
}

bool is_subdivision_of(const HostTree& subdivided, const HostTree& original) {
  std::map<NodeId, NodeId> identity;
  for (const auto& n : original.nodes()) identity[n] = n;
  try {
    subdivision_paths(original, subdivided, identity);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

Representation lift_representation(const Representation& rep,
                                   std::shared_ptr<const HostTree> subdivided,
                                   const std::map<NodeId, NodeId>& node_map) {
  const HostTree& original = rep.host();
  auto paths = subdivision_paths(original, *subdivided, node_map);
  std::map<VertexId, Subtree> lifted;
  for (const auto& [v, t] : rep.assignment()) {
    NodeSet s = subdivided->empty_set();
    for (int i : t.nodes().elements()) s.insert(subdivided->index_of(node_map.at(original.name(i))));
    for (const auto& [edge, interior] : paths)
      if (t.nodes().contains(edge.first) && t.nodes().contains(edge.second))
        for (int x : interior) s.insert(x);
    lifted.emplace(v, Subtree(subdivided, std::move(s)));
  }
  return Representation(subdivided, std::move(lifted));
}

}  // namespace sog
