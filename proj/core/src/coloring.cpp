#include "sog/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "sog/errors.hpp"

namespace sog {

int Coloring::color_of(const VertexId& v) const {
  auto it = colors.find(v);
  if (it == colors.end()) throw DomainError("colouring has no entry for '" + v + "'");
  return it->second;
}

std::vector<std::vector<VertexId>> Coloring::classes() const {
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(std::max(k, 0)));
  for (const auto& [v, c] : colors)
    if (c >= 0 && c < k) out[c].push_back(v);
  return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.k < 1 || c.colors.size() != g.vertex_count()) return false;
  for (const auto& v : g.vertices()) {
    auto it = c.colors.find(v);
    if (it == c.colors.end() || it->second < 0 || it->second >= c.k) return false;
  }
  for (const auto& e : g.edges())
    if (c.colors.at(e.first) == c.colors.at(e.second)) return false;
  return true;
}

namespace {

class Colorer {
 public:
  Colorer(const IndexedGraph& g, int k) : g_(g), k_(k) {
    order_.resize(g.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.adjacency[a].size() > g.adjacency[b].size();
    });
    color_.assign(g.size(), -1);
    // blocked_[v][c] counts coloured neighbours of v holding colour c.
    blocked_.assign(g.size(), std::vector<int>(k, 0));
  }

  bool solve() { return extend(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool extend(std::size_t depth, int used) {
    if (depth == order_.size()) return true;
    int v = order_[depth];
    // Colours above `used` are interchangeable, so only try the first fresh one.
    int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (blocked_[v][c] > 0) continue;
      if (!assign(v, c)) {
        unassign(v, c);
        continue;
      }
      if (extend(depth + 1, std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  // Forward check: fails if some uncoloured neighbour is left with no colour.
  bool assign(int v, int c) {
    color_[v] = c;
    bool ok = true;
    for (int w : g_.adjacency[v]) {
      ++blocked_[w][c];
      if (color_[w] == -1 && ok) {
        bool any = false;
        for (int x = 0; x < k_ && !any; ++x) any = blocked_[w][x] == 0;
        ok = any;
      }
    }
    return ok;
  }

  void unassign(int v, int c) {
    color_[v] = -1;
    for (int w : g_.adjacency[v]) --blocked_[w][c];
  }

  const IndexedGraph& g_;
  int k_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<std::vector<int>> blocked_;
};

}  // namespace

std::optional<Coloring> find_k_coloring(const Graph& g, int k) {
  if (k < 1) throw DomainError("k must be positive");
  IndexedGraph ig(g);
  Colorer colorer(ig, k);
  if (!colorer.solve()) return std::nullopt;
  Coloring out;
  out.k = k;
  for (int i = 0; i < ig.size(); ++i) out.colors[ig.names[i]] = colorer.colors()[i];
  return out;
}

bool same_up_to_permutation(const Coloring& a, const Coloring& b) {
  if (a.colors.size() != b.colors.size()) return false;
  std::map<int, int> forward;
  std::map<int, int> backward;
  for (const auto& [v, ca] : a.colors) {
    auto it = b.colors.find(v);
    if (it == b.colors.end()) return false;
    int cb = it->second;
    auto [f, fnew] = forward.emplace(ca, cb);
    auto [r, rnew] = backward.emplace(cb, ca);
    if (f->second != cb || r->second != ca) return false;
  }
  return true;
}

}  // namespace sog
