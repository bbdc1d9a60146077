#include "sog/dot.hpp"

#include <sstream>

namespace sog::dot {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string write_graph(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (const auto& v : g.vertices()) out << "  " << quoted(v) << ";\n";
  for (const auto& e : g.edges()) out << "  " << quoted(e.first) << " -- " << quoted(e.second) << ";\n";
  out << "}\n";
  return out.str();
}

std::string write_tree(const HostTree& t, const std::optional<NodeSet>& highlight, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n  node [color=black];\n";
  for (int v = 0; v < t.size(); ++v) {
    out << "  " << quoted(t.name(v));
    if (highlight && highlight->contains(v)) out << " [style=filled, fillcolor=red]";
    out << ";\n";
  }
  for (const auto& [a, b] : t.named_edges()) out << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sog::dot
