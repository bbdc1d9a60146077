#include "sog/decode.hpp"

#include <algorithm>
#include <optional>

#include "sog/canonical_builder.hpp"
#include "sog/errors.hpp"
#include "sog/tree_analysis.hpp"

namespace sog {

namespace {

std::map<char, std::map<VertexId, VertexId>> copies_of(const Representation& rep, const BlockedLabels& labels,
                                                       const Graph& original) {
  std::map<char, std::map<VertexId, VertexId>> out;
  for (const auto& [x, origin] : labels.vertex_origin) {
    if (!original.has_vertex(origin))
      throw DomainError("label origin '" + origin + "' is not a vertex of the original graph");
    if (!rep.assignment().contains(x)) throw DomainError("representation has no subtree for '" + x + "'");
    out[labels.copy.at(x)][origin] = x;
  }
  return out;
}

// Numbers the regions in use by label order; nullopt if more than k are used
// or the result is improper.
std::optional<DecodedColoring> colour_by_region(const std::map<VertexId, int>& region_of_vertex,
                                                const std::map<int, NodeId>& region_label, const Graph& original,
                                                int k) {
  std::map<NodeId, int> used;
  for (const auto& [v, region] : region_of_vertex) used[region_label.at(region)] = region;
  if (static_cast<int>(used.size()) > k) return std::nullopt;
  std::map<int, int> colour_of_region;
  DecodedColoring out;
  for (const auto& [label, region] : used) {
    int colour = static_cast<int>(colour_of_region.size());
    colour_of_region[region] = colour;
    out.witnesses[colour] = label;
  }
  out.coloring.k = k;
  for (const auto& [v, region] : region_of_vertex) out.coloring.colors[v] = colour_of_region.at(region);
  if (!is_proper(original, out.coloring)) return std::nullopt;
  return out;
}

DecodedColoring decode_blocked(const Representation& rep, const BlockedLabels& labels, const Graph& original, int k) {
  auto copies = copies_of(rep, labels, original);
  const HostTree& host = rep.host();
  TreeAnalysis a = analyze_tree(host);
  auto illegal = find_illegal_pairs(rep, labels, original);

  std::map<int, NodeId> twig_label;
  for (int t = 0; t < static_cast<int>(a.twigs.size()); ++t) twig_label[t] = host.name(a.twigs[t].leaf());

  for (char copy : kCopies) {
    auto it = copies.find(copy);
    if (it == copies.end() || it->second.size() != original.vertex_count()) continue;
    bool spoiled = std::any_of(illegal.begin(), illegal.end(),
                               [&](const auto& pair) { return labels.copy.at(pair.first) == copy; });
    if (spoiled) continue;

    std::map<VertexId, int> twig_of_vertex;
    bool on_twigs = true;
    for (const auto& [origin, x] : it->second) {
      auto nodes = rep.subtree(x).nodes().elements();
      int t = a.twig_of[nodes.front()];
      on_twigs = t >= 0 && std::all_of(nodes.begin(), nodes.end(), [&](int n) { return a.twig_of[n] == t; });
      if (!on_twigs) break;
      twig_of_vertex[origin] = t;
    }
    if (!on_twigs) continue;
    if (auto decoded = colour_by_region(twig_of_vertex, twig_label, original, k)) {
      decoded->copy = copy;
      return *decoded;
    }
  }
  throw NoNiceCopyError("no copy of the original graph lies on the twigs without an illegal pair");
}

DecodedColoring decode_subpaths(const Representation& rep, const BlockedLabels& labels, const Graph& original,
                                int k) {
  auto copies = copies_of(rep, labels, original);
  const HostTree& host = rep.host();
  std::vector<const Subtree*> family;
  for (const auto& x : labels.clique_members()) family.push_back(&rep.subtree(x));
  if (family.empty()) throw NoNiceCopyError("no edge-representatives or brothers to locate a centre");
  NodeSet common = common_nodes(family);
  if (common.empty()) throw NoNiceCopyError("edge-representatives and brothers share no common node");

  int centre = -1;
  for (int n : common.elements())
    if (centre == -1 || host.degree(n) > host.degree(centre)) centre = n;

  // Component of host - centre, named by the centre's neighbour inside it.
  std::vector<int> component(host.size(), -1);
  std::map<int, NodeId> component_label;
  for (int start : host.neighbors(centre)) {
    component_label[start] = host.name(start);
    std::vector<int> stack{start};
    component[start] = start;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : host.neighbors(v))
        if (w != centre && component[w] == -1) {
          component[w] = start;
          stack.push_back(w);
        }
    }
  }

  for (char copy : kCopies) {
    auto it = copies.find(copy);
    if (it == copies.end() || it->second.size() != original.vertex_count()) continue;
    std::map<VertexId, int> region;
    bool placed = true;
    for (const auto& [origin, x] : it->second) {
      auto nodes = rep.subtree(x).nodes().elements();
      int c = component[nodes.front()];
      placed = c >= 0 && std::all_of(nodes.begin(), nodes.end(), [&](int n) { return component[n] == c; });
      if (!placed) break;
      region[origin] = c;
    }
    if (!placed) continue;
    if (auto decoded = colour_by_region(region, component_label, original, k)) {
      decoded->copy = copy;
      return *decoded;
    }
  }
  throw NoNiceCopyError("no copy of the original graph splits properly around the common node");
}

}  // namespace

DecodedColoring decode_coloring(const Representation& rep, const BlockedLabels& labels, const Graph& original, int k) {
  if (k < 1) throw DomainError("k must be positive");
  if (labels.named.empty()) return decode_subpaths(rep, labels, original, k);
  return decode_blocked(rep, labels, original, k);
}

}  // namespace sog
