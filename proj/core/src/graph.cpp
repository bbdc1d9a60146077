#include "sog/graph.hpp"

#include <queue>

#include "sog/errors.hpp"

namespace sog {

Edge::Edge(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  first = std::move(a);
  second = std::move(b);
}

Graph Graph::from_lists(const std::vector<VertexId>& vertices,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::add_vertex(const VertexId& v) {
  if (!adjacency_.emplace(v, std::set<VertexId>{}).second)
    throw DomainError("duplicate vertex '" + v + "'");
}

void Graph::add_edge(const VertexId& a, const VertexId& b) {
  if (a == b) throw DomainError("self-loop on '" + a + "'");
  auto ia = adjacency_.find(a);
  auto ib = adjacency_.find(b);
  if (ia == adjacency_.end() || ib == adjacency_.end())
    throw DomainError("edge (" + a + ", " + b + ") has an undeclared endpoint");
  if (!ia->second.insert(b).second)
    throw DomainError("duplicate edge (" + a + ", " + b + ")");
  ib->second.insert(a);
  ++edge_count_;
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.contains(b);
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adjacency_)
    for (const auto& w : nbrs)
      if (v < w) out.emplace_back(v, w);
  return out;
}

const std::set<VertexId>& Graph::neighbors(const VertexId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw DomainError("unknown vertex '" + v + "'");
  return it->second;
}

Graph Graph::induced(const std::set<VertexId>& keep) const {
  Graph out;
  for (const auto& v : keep)
    if (has_vertex(v)) out.add_vertex(v);
  for (const auto& e : edges())
    if (out.has_vertex(e.first) && out.has_vertex(e.second)) out.add_edge(e.first, e.second);
  return out;
}

bool graphs_equal(const Graph& a, const Graph& b) { return a == b; }

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  IndexedGraph ig(g);
  std::vector<bool> seen(ig.size(), false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : ig.adjacency[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
  }
  return reached == ig.size();
}

IndexedGraph::IndexedGraph(const Graph& g) : names(g.vertices()) {
  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
  adjacency.resize(names.size());
  matrix.assign(names.size(), std::vector<bool>(names.size(), false));
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    for (const auto& w : g.neighbors(names[i])) {
      int j = index.at(w);
      adjacency[i].push_back(j);
      matrix[i][j] = true;
    }
}

namespace named {

namespace {
std::string label(const std::string& prefix, int i) { return prefix + std::to_string(i); }
}  // namespace

Graph complete(int n, const std::string& prefix) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(label(prefix, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(label(prefix, i), label(prefix, j));
  return g;
}

Graph path(int n, const std::string& prefix) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(label(prefix, i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(label(prefix, i), label(prefix, i + 1));
  return g;
}

Graph cycle(int n, const std::string& prefix) {
  Graph g = path(n, prefix);
  if (n >= 3) g.add_edge(label(prefix, n - 1), label(prefix, 0));
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g;
  for (int i = 0; i < a; ++i) g.add_vertex(label("a", i));
  for (int j = 0; j < b; ++j) g.add_vertex(label("b", j));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(label("a", i), label("b", j));
  return g;
}

Graph prism() {
  Graph g;
  for (int i = 0; i < 3; ++i) {
    g.add_vertex(label("t", i));
    g.add_vertex(label("u", i));
  }
  for (int i = 0; i < 3; ++i) {
    g.add_edge(label("t", i), label("t", (i + 1) % 3));
    g.add_edge(label("u", i), label("u", (i + 1) % 3));
    g.add_edge(label("t", i), label("u", i));
  }
  return g;
}

Graph wheel(int rim) {
  Graph g = cycle(rim, "r");
  g.add_vertex("hub");
  for (int i = 0; i < rim; ++i) g.add_edge("hub", label("r", i));
  return g;
}

}  // namespace named

}  // namespace sog
