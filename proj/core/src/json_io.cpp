#include "sog/json_io.hpp"

#include <nlohmann/json.hpp>

#include "sog/errors.hpp"

namespace sog::json {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

// Wraps shape errors (missing keys, wrong types) as ParseError.
template <typename F>
auto shaped(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected ") + what + " document shape: " + e.what(), 0, 0);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Graph graph_from(const json& j) {
  auto vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be pairs", 0, 0);
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph::from_lists(vertices, edges);
}

json graph_to(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

HostTree tree_from(const json& j) {
  auto nodes = j.at("nodes").get<std::vector<std::string>>();
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("tree edges must be pairs", 0, 0);
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return HostTree::from_lists(nodes, edges);
}

json tree_to(const HostTree& t) {
  json edges = json::array();
  for (const auto& [a, b] : t.named_edges()) edges.push_back({a, b});
  return {{"nodes", t.nodes()}, {"edges", edges}};
}

BlockedLabels labels_from(const json& j) {
  BlockedLabels l;
  for (const auto& [v, r] : j.at("role").items()) l.role[v] = role_from_string(r.get<std::string>());
  for (const auto& [v, c] : j.at("copy").items()) {
    auto s = c.get<std::string>();
    if (s.size() != 1 || s[0] < 'a' || s[0] > 'f') throw DomainError("copy must be one of a..f, got '" + s + "'");
    l.copy[v] = s[0];
  }
  for (const auto& [v, o] : j.at("vertex_origin").items()) l.vertex_origin[v] = o.get<std::string>();
  for (const auto& [v, e] : j.at("edge_origin").items()) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge origins must be pairs", 0, 0);
    l.edge_origin[v] = Edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  for (const auto& [v, b] : j.at("brother_of").items()) l.brother_of[v] = b.get<std::string>();
  if (j.contains("named"))
    for (const auto& [k, v] : j.at("named").items()) l.named[k] = v.get<std::string>();
  return l;
}

json labels_to(const BlockedLabels& l) {
  json role = json::object(), copy = json::object(), vorigin = json::object(), eorigin = json::object(),
       brother = json::object(), named = json::object();
  for (const auto& [v, r] : l.role) role[v] = to_string(r);
  for (const auto& [v, c] : l.copy) copy[v] = std::string(1, c);
  for (const auto& [v, o] : l.vertex_origin) vorigin[v] = o;
  for (const auto& [v, e] : l.edge_origin) eorigin[v] = {e.first, e.second};
  for (const auto& [v, b] : l.brother_of) brother[v] = b;
  for (const auto& [k, v] : l.named) named[k] = v;
  return {{"role", role},           {"copy", copy},          {"vertex_origin", vorigin},
          {"edge_origin", eorigin}, {"brother_of", brother}, {"named", named}};
}

}  // namespace

Graph read_graph(const std::string& text) {
  json j = parse(text);
  return shaped("graph", [&] { return graph_from(j); });
}

std::string write_graph(const Graph& g) { return dump(graph_to(g)); }

HostTree read_tree(const std::string& text) {
  json j = parse(text);
  return shaped("tree", [&] { return tree_from(j.contains("host") ? j.at("host") : j); });
}

std::string write_tree(const HostTree& t) { return dump(tree_to(t)); }

Representation read_representation(const std::string& text) {
  json j = parse(text);
  return shaped("representation", [&] {
    auto host = std::make_shared<const HostTree>(tree_from(j.at("host")));
    std::map<VertexId, Subtree> assignment;
    for (const auto& [v, nodes] : j.at("subtrees").items())
      assignment.emplace(v, Subtree::from_labels(host, nodes.get<std::vector<std::string>>()));
    return Representation(host, std::move(assignment));
  });
}

std::string write_representation(const Representation& rep) {
  json subtrees = json::object();
  for (const auto& [v, t] : rep.assignment()) subtrees[v] = t.labels();
  return dump({{"host", tree_to(rep.host())}, {"subtrees", subtrees}});
}

BlockedLabels read_labels(const std::string& text) {
  json j = parse(text);
  return shaped("labels", [&] { return labels_from(j.contains("labels") ? j.at("labels") : j); });
}

std::string write_labels(const BlockedLabels& labels) { return dump(labels_to(labels)); }

BlockedGraph read_blocked(const std::string& text) {
  json j = parse(text);
  return shaped("blocked graph", [&] {
    BlockedGraph b;
    b.graph = graph_from(j);
    b.labels = labels_from(j.at("labels"));
    if (j.contains("params") && !j.at("params").is_null()) {
      const auto& p = j.at("params");
      GadgetParams params{p.at("d").get<int>(), p.at("u").get<int>(), p.value("path_internal", 3)};
      params.validate();
      b.params = params;
    }
    return b;
  });
}

std::string write_blocked(const BlockedGraph& b) {
  json j = graph_to(b.graph);
  j["labels"] = labels_to(b.labels);
  if (b.params)
    j["params"] = {{"d", b.params->d}, {"u", b.params->u}, {"path_internal", b.params->path_internal}};
  return dump(j);
}

Coloring read_coloring(const std::string& text) {
  json j = parse(text);
  return shaped("colouring", [&] {
    Coloring c;
    c.k = j.at("k").get<int>();
    if (c.k < 1) throw DomainError("colouring needs k >= 1");
    for (const auto& [v, col] : j.at("colors").items()) c.colors[v] = col.get<int>();
    return c;
  });
}

std::string write_coloring(const Coloring& c) {
  json colors = json::object();
  for (const auto& [v, col] : c.colors) colors[v] = col;
  return dump({{"k", c.k}, {"colors", colors}});
}

std::string write_analysis(const HostTree& t, const TreeAnalysis& a) {
  auto names = [&](const std::vector<int>& ids) {
    std::vector<std::string> out;
    for (int i : ids) out.push_back(t.name(i));
    return out;
  };
  json twigs = json::array();
  for (const auto& tw : a.twigs) {
    json entry = {{"nodes", names(tw.nodes)}, {"edge_length", tw.edge_length()}};
    entry["attachment"] = tw.attachment ? json(t.name(*tw.attachment)) : json(nullptr);
    twigs.push_back(entry);
  }
  return dump({{"leaves", names(a.leaves)},
               {"leafage", a.leafage},
               {"max_degree", a.max_degree},
               {"branching_nodes", names(a.branching_nodes)},
               {"twigs", twigs},
               {"lastbranches", names(a.lastbranches)},
               {"is_path", a.is_path}});
}

}  // namespace sog::json
