#include "sog/tree_enumeration.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "sog/errors.hpp"

namespace sog {

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency_of(const HostTree& t) {
  Adjacency adj(t.size());
  for (int v = 0; v < t.size(); ++v) adj[v] = t.neighbors(v);
  return adj;
}

std::vector<int> centres(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_form(const Adjacency& adj, const std::vector<bool>& marked, int v, int parent) {
  std::vector<std::string> children;
  for (int w : adj[v])
    if (w != parent) children.push_back(rooted_form(adj, marked, w, v));
  std::sort(children.begin(), children.end());
  std::string out = marked[v] ? "(*" : "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::string canonical(const Adjacency& adj, const std::vector<bool>& marked) {
  std::string best;
  for (int c : centres(adj)) {
    std::string f = rooted_form(adj, marked, c, -1);
    if (best.empty() || f < best) best = f;
  }
  return best;
}

HostTree relabel_from_centre(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> label(n, -1);
  std::queue<int> queue;
  int start = centres(adj).front();
  int next = 0;
  queue.push(start);
  label[start] = next++;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v])
      if (label[w] == -1) {
        label[w] = next++;
        queue.push(w);
      }
  }
  std::vector<NodeId> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v])
      if (v < w) edges.emplace_back(nodes[label[v]], nodes[label[w]]);
  return HostTree::from_lists(nodes, edges);
}

}  // namespace

std::string canonical_form(const HostTree& t) {
  return canonical(adjacency_of(t), std::vector<bool>(t.size(), false));
}

std::string canonical_form(const HostTree& t, const NodeSet& marked) {
  std::vector<bool> m(t.size(), false);
  for (int v : marked.elements()) m[v] = true;
  return canonical(adjacency_of(t), m);
}

std::vector<HostTree> free_trees(int n) {
  if (n < 1) throw DomainError("trees need at least one node");
  std::map<std::string, Adjacency> level{{"()", Adjacency(1)}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Adjacency> next;
    for (const auto& [form, adj] : level) {
      for (int v = 0; v < size - 1; ++v) {
        Adjacency grown = adj;
        grown.emplace_back();
        grown[v].push_back(size - 1);
        grown[size - 1].push_back(v);
        auto key = canonical(grown, std::vector<bool>(size, false));
        next.try_emplace(key, std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<HostTree> out;
  for (const auto& [form, adj] : level) out.push_back(relabel_from_centre(adj));
  return out;
}

std::vector<std::uint64_t> connected_subsets(const HostTree& t, std::size_t limit) {
  const int n = t.size();
  if (n > 63) throw DomainError("subset enumeration supports hosts of at most 63 nodes");
  // Rooted at node 0, every connected subset has a unique top node v and is
  // v plus, per child, nothing or a connected subset topped by that child.
  std::vector<int> parent(n, -1), order;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<std::vector<std::uint64_t>> topped(n);
  std::size_t total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::uint64_t> sets{std::uint64_t{1} << v};
    for (int w : t.neighbors(v)) {
      if (w == parent[v]) continue;
      std::vector<std::uint64_t> extended;
      for (auto s : sets) {
        extended.push_back(s);
        for (auto c : topped[w]) extended.push_back(s | c);
        if (extended.size() > limit) throw DomainError("host has too many connected subsets to enumerate");
      }
      sets = std::move(extended);
    }
    total += sets.size();
    if (total > limit) throw DomainError("host has too many connected subsets to enumerate");
    topped[v] = std::move(sets);
  }
  std::vector<std::uint64_t> out;
  out.reserve(total);
  for (auto& sets : topped) out.insert(out.end(), sets.begin(), sets.end());
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

NodeSet mask_to_set(const HostTree& t, std::uint64_t mask) {
  NodeSet s = t.empty_set();
  for (int v = 0; v < t.size(); ++v)
    if (mask >> v & 1) s.insert(v);
  return s;
}

}  // namespace sog
