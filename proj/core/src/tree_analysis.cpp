#include "sog/tree_analysis.hpp"

#include <algorithm>

namespace sog {

int Twig::edge_length() const {
  int n = static_cast<int>(nodes.size());
  return attachment ? n : n - 1;
}

int TreeAnalysis::twigs_at(int v) const {
  return static_cast<int>(std::count_if(twigs.begin(), twigs.end(),
                                        [v](const Twig& t) { return t.attachment == v; }));
}

TreeAnalysis analyze_tree(const HostTree& t) {
  TreeAnalysis a;
  const int n = t.size();
  a.twig_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int deg = t.degree(v);
    a.max_degree = std::max(a.max_degree, deg);
    if (deg <= 1) a.leaves.push_back(v);
    if (deg >= 3) a.branching_nodes.push_back(v);
  }
  a.leafage = static_cast<int>(a.leaves.size());
  a.is_path = a.branching_nodes.empty();

  if (a.is_path) {
    Twig whole;
    int start = a.leaves.front();
    int previous = -1;
    for (int v = start; v != -1;) {
      whole.nodes.push_back(v);
      int next = -1;
      for (int w : t.neighbors(v))
        if (w != previous) next = w;
      previous = v;
      v = next;
    }
    for (int v : whole.nodes) a.twig_of[v] = 0;
    a.twigs.push_back(std::move(whole));
    return a;
  }

  for (int leaf : a.leaves) {
    Twig twig;
    int previous = -1;
    int v = leaf;
    while (true) {
      twig.nodes.push_back(v);
      int next = -1;
      for (int w : t.neighbors(v))
        if (w != previous) next = w;
      if (t.degree(next) >= 3) {
        twig.attachment = next;
        break;
      }
      previous = v;
      v = next;
    }
    int id = static_cast<int>(a.twigs.size());
    for (int node : twig.nodes) a.twig_of[node] = id;
    a.twigs.push_back(std::move(twig));
  }

  for (int b : a.branching_nodes)
    if (a.twigs_at(b) >= t.degree(b) - 1) a.lastbranches.push_back(b);
  return a;
}

}  // namespace sog
