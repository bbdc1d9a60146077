#include "sog/blocked_graph.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "sog/errors.hpp"
#include "sog/tree_analysis.hpp"

namespace sog {

std::string to_string(Role r) {
  switch (r) {
    case Role::VertexRep: return "vertex_rep";
    case Role::EdgeRep: return "edge_rep";
    case Role::Brother: return "brother";
    case Role::Gadget: return "gadget";
  }
  return "?";
}

Role role_from_string(const std::string& s) {
  if (s == "vertex_rep") return Role::VertexRep;
  if (s == "edge_rep") return Role::EdgeRep;
  if (s == "brother") return Role::Brother;
  if (s == "gadget") return Role::Gadget;
  throw DomainError("unknown role '" + s + "'");
}

namespace {

std::string copy_tag(char copy) {
  return std::string("copy") + static_cast<char>(std::toupper(static_cast<unsigned char>(copy)));
}

}  // namespace

std::string vertex_rep_name(char copy, const VertexId& v) { return copy_tag(copy) + ":" + v; }

std::string edge_rep_name(char copy, const Edge& e) {
  return "edge:" + copy_tag(copy) + ":(" + e.first + "," + e.second + ")";
}

std::string brother_name(char copy, const VertexId& v) { return "brother:" + copy_tag(copy) + ":" + v; }

std::vector<VertexId> BlockedLabels::with_role(Role r) const {
  std::vector<VertexId> out;
  for (const auto& [v, role_of_v] : role)
    if (role_of_v == r) out.push_back(v);
  return out;
}

std::vector<VertexId> BlockedLabels::clique_members() const {
  std::vector<VertexId> out;
  for (const auto& [v, r] : role)
    if (r == Role::EdgeRep || r == Role::Brother) out.push_back(v);
  return out;
}

namespace {

BlockedGraph build_core(const Graph& g) {
  BlockedGraph out;
  auto& G = out.graph;
  auto& L = out.labels;
  const auto vertices = g.vertices();
  const auto edges = g.edges();

  for (char c : kCopies) {
    for (const auto& v : vertices) {
      auto rep = vertex_rep_name(c, v);
      auto bro = brother_name(c, v);
      G.add_vertex(rep);
      G.add_vertex(bro);
      L.role[rep] = Role::VertexRep;
      L.role[bro] = Role::Brother;
      L.copy[rep] = c;
      L.vertex_origin[rep] = v;
      L.brother_of[rep] = bro;
      G.add_edge(rep, bro);
    }
    for (const auto& e : edges) {
      auto rep = edge_rep_name(c, e);
      G.add_vertex(rep);
      L.role[rep] = Role::EdgeRep;
      L.copy[rep] = c;
      L.edge_origin[rep] = e;
      G.add_edge(rep, vertex_rep_name(c, e.first));
      G.add_edge(rep, vertex_rep_name(c, e.second));
    }
  }

  auto clique = L.clique_members();
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) G.add_edge(clique[i], clique[j]);
  return out;
}

}  // namespace

BlockedGraph build_blocked_graph(const Graph& g, const GadgetParams& p) {
  p.validate();
  BlockedGraph out = build_core(g);
  Gadget gadget = build_gadget(p);
  for (const auto& v : gadget.graph.vertices()) {
    out.graph.add_vertex(v);
    out.labels.role[v] = Role::Gadget;
  }
  for (const auto& e : gadget.graph.edges()) out.graph.add_edge(e.first, e.second);
  out.labels.named = gadget.named;
  for (const auto& x : out.labels.clique_members()) {
    out.graph.add_edge(x, gadget.named.at("vs"));
    out.graph.add_edge(x, gadget.named.at("vb"));
  }
  out.params = p;
  return out;
}

BlockedGraph build_empty_blocked(const Graph& g) { return build_core(g); }

Graph amplify_3con(const Graph& g) {
  if (g.vertex_count() < 2) throw DomainError("amplification needs at least two vertices");
  if (!is_connected(g)) throw DomainError("amplification needs a connected graph");
  Graph out;
  auto name = [](int copy, const VertexId& v) { return "amp" + std::to_string(copy) + ":" + v; };
  for (int c = 1; c <= 3; ++c)
    for (const auto& v : g.vertices()) out.add_vertex(name(c, v));
  for (int c = 1; c <= 3; ++c)
    for (const auto& e : g.edges()) out.add_edge(name(c, e.first), name(c, e.second));
  for (const auto& v : g.vertices()) {
    out.add_edge(name(1, v), name(2, v));
    out.add_edge(name(1, v), name(3, v));
    out.add_edge(name(2, v), name(3, v));
  }
  return out;
}

ReductionParams reduction_params_for_tree(const HostTree& t) {
  TreeAnalysis a = analyze_tree(t);
  if (a.leafage < 3) throw DomainError("reduction needs a host with at least three leaves");
  ReductionParams r;
  r.k = a.leafage;
  if (a.branching_nodes.size() == 1) {
    r.gadget.d = r.k;
    r.gadget.u = 0;
    return r;
  }
  int d = std::numeric_limits<int>::max();
  for (int b : a.lastbranches) d = std::min(d, t.degree(b));
  r.gadget.d = d;
  r.gadget.u = r.k - d + 1;
  return r;
}

ReductionParams reduction_params_for_k(int k) {
  if (k < 3) throw DomainError("reduction needs k >= 3");
  ReductionParams r;
  r.k = k;
  r.gadget.d = 3;
  r.gadget.u = k == 3 ? 0 : k - 2;
  return r;
}

}  // namespace sog
