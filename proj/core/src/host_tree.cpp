#include "sog/host_tree.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "sog/errors.hpp"

namespace sog {

HostTree HostTree::from_lists(const std::vector<NodeId>& nodes,
                              const std::vector<std::pair<NodeId, NodeId>>& edges) {
  if (nodes.empty()) throw DomainError("host tree needs at least one node");
  HostTree t;
  t.names_ = nodes;
  std::sort(t.names_.begin(), t.names_.end());
  if (std::adjacent_find(t.names_.begin(), t.names_.end()) != t.names_.end())
    throw DomainError("host tree has duplicate node labels");
  for (int i = 0; i < t.size(); ++i) t.index_[t.names_[i]] = i;
  if (edges.size() + 1 != nodes.size())
    throw DomainError("host tree must have exactly |nodes| - 1 edges");
  t.adjacency_.resize(t.names_.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = t.find(a);
    auto ib = t.find(b);
    if (!ia || !ib) throw DomainError("host tree edge (" + a + ", " + b + ") has an unknown endpoint");
    if (*ia == *ib) throw DomainError("host tree has a self-loop on '" + a + "'");
    if (!seen.emplace(std::min(*ia, *ib), std::max(*ia, *ib)).second)
      throw DomainError("host tree has a duplicate edge (" + a + ", " + b + ")");
    t.adjacency_[*ia].push_back(*ib);
    t.adjacency_[*ib].push_back(*ia);
  }
  for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  if (!t.is_connected_subset(t.full_set())) throw DomainError("host tree is not connected");
  return t;
}

int HostTree::index_of(const NodeId& n) const {
  auto it = index_.find(n);
  if (it == index_.end()) throw DomainError("unknown host node '" + n + "'");
  return it->second;
}

std::optional<int> HostTree::find(const NodeId& n) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool HostTree::has_edge(int a, int b) const {
  const auto& nbrs = adjacency_.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<std::pair<int, int>> HostTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size(); ++v)
    for (int w : adjacency_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

std::vector<std::pair<NodeId, NodeId>> HostTree::named_edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (auto [a, b] : edges()) out.emplace_back(names_[a], names_[b]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> HostTree::path_between(int a, int b) const {
  std::vector<int> parent(names_.size(), -1);
  std::queue<int> queue;
  queue.push(a);
  parent[a] = a;
  while (!queue.empty() && parent[b] == -1) {
    int v = queue.front();
    queue.pop();
    for (int w : adjacency_[v])
      if (parent[w] == -1) {
        parent[w] = v;
        queue.push(w);
      }
  }
  std::vector<int> out;
  for (int v = b; v != a; v = parent[v]) out.push_back(v);
  out.push_back(a);
  std::reverse(out.begin(), out.end());
  return out;
}

NodeSet HostTree::full_set() const {
  NodeSet s(names_.size());
  for (int i = 0; i < size(); ++i) s.insert(i);
  return s;
}

NodeSet HostTree::set_of(const std::vector<NodeId>& labels) const {
  NodeSet s(names_.size());
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<NodeId> HostTree::labels_of(const NodeSet& s) const {
  std::vector<NodeId> out;
  for (int i : s.elements()) out.push_back(names_[i]);
  return out;
}

bool HostTree::is_connected_subset(const NodeSet& s) const {
  auto members = s.elements();
  if (members.empty()) return false;
  std::vector<bool> seen(names_.size(), false);
  std::vector<int> stack{members.front()};
  seen[members.front()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v])
      if (!seen[w] && s.contains(w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == members.size();
}

int HostTree::subtree_leaf_count(const NodeSet& s) const {
  auto members = s.elements();
  if (members.size() == 1) return 1;
  int leaves = 0;
  for (int v : members) {
    int inner = 0;
    for (int w : adjacency_[v]) inner += s.contains(w) ? 1 : 0;
    if (inner <= 1) ++leaves;
  }
  return leaves;
}

int HostTree::boundary_node_count(const NodeSet& s) const {
  int count = 0;
  for (int v : s.elements())
    for (int w : adjacency_[v])
      if (!s.contains(w)) {
        ++count;
        break;
      }
  return count;
}

bool HostTree::is_path_subset(const NodeSet& s) const {
  for (int v : s.elements()) {
    int inner = 0;
    for (int w : adjacency_[v]) inner += s.contains(w) ? 1 : 0;
    if (inner > 2) return false;
  }
  return true;
}

Graph HostTree::as_graph() const {
  Graph g;
  for (const auto& n : names_) g.add_vertex(n);
  for (const auto& [a, b] : named_edges()) g.add_edge(a, b);
  return g;
}

namespace trees {

HostTree path(int nodes, const std::string& prefix) {
  std::vector<NodeId> names;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < nodes; ++i) names.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < nodes; ++i) edges.emplace_back(names[i], names[i + 1]);
  return HostTree::from_lists(names, edges);
}

HostTree star(int leaves) { return spider(std::vector<int>(static_cast<std::size_t>(leaves), 1)); }

HostTree double_star(int leaves_each) {
  std::vector<NodeId> names{"c1", "c2"};
  std::vector<std::pair<NodeId, NodeId>> edges{{"c1", "c2"}};
  for (int side = 1; side <= 2; ++side)
    for (int i = 1; i <= leaves_each; ++i) {
      std::string leaf = "l" + std::to_string(side) + "." + std::to_string(i);
      names.push_back(leaf);
      edges.emplace_back("c" + std::to_string(side), leaf);
    }
  return HostTree::from_lists(names, edges);
}

HostTree spider(const std::vector<int>& legs) {
  std::vector<NodeId> names{"c"};
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t leg = 0; leg < legs.size(); ++leg) {
    std::string previous = "c";
    for (int j = 1; j <= legs[leg]; ++j) {
      // The outermost node of leg i is "l<i>" so stars read naturally.
      std::string node = j == legs[leg] ? "l" + std::to_string(leg + 1)
                                        : "l" + std::to_string(leg + 1) + "." + std::to_string(j);
      names.push_back(node);
      edges.emplace_back(previous, node);
      previous = node;
    }
  }
  return HostTree::from_lists(names, edges);
}

}  // namespace trees

}  // namespace sog
