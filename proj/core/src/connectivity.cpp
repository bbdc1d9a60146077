#include "sog/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "sog/errors.hpp"

namespace sog {

namespace {

struct FlowEdge {
  int to;
  int cap;
};

class UnitFlow {
 public:
  explicit UnitFlow(int n) : adj_(n) {}

  void add(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  int max_flow(int s, int t, int cutoff) {
    int flow = 0;
    std::vector<int> via(adj_.size());
    while (flow < cutoff) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        int v = queue.front();
        queue.pop();
        for (int id : adj_[v]) {
          const auto& e = edges_[id];
          if (e.cap > 0 && via[e.to] == -1) {
            via[e.to] = id;
            queue.push(e.to);
          }
        }
      }
      if (via[t] == -1) break;
      for (int v = t; v != s;) {
        int id = via[v];
        edges_[id].cap -= 1;
        edges_[id ^ 1].cap += 1;
        v = edges_[id ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<FlowEdge> edges_;
};

}  // namespace

int local_vertex_connectivity(const IndexedGraph& g, int s, int t) {
  const int n = g.size();
  // v_in = v, v_out = v + n; internal vertices have capacity one.
  UnitFlow flow(2 * n);
  const int big = n;
  for (int v = 0; v < n; ++v) flow.add(v, v + n, (v == s || v == t) ? big : 1);
  for (int v = 0; v < n; ++v)
    for (int w : g.adjacency[v]) flow.add(v + n, w, big);
  return flow.max_flow(s + n, t, n);
}

int vertex_connectivity(const Graph& g) {
  if (g.vertex_count() < 2) throw DomainError("vertex connectivity needs at least two vertices");
  IndexedGraph ig(g);
  const int n = ig.size();
  int best = n - 1;
  for (int s = 0; s < n && best > 0; ++s)
    for (int t = s + 1; t < n && best > 0; ++t)
      if (!ig.matrix[s][t]) best = std::min(best, local_vertex_connectivity(ig, s, t));
  return best;
}

int min_degree(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (const auto& v : g.vertices()) best = std::min(best, static_cast<int>(g.degree(v)));
  return g.vertex_count() == 0 ? 0 : best;
}

}  // namespace sog
