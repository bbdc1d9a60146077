#include "sog/representation.hpp"

#include "sog/errors.hpp"

namespace sog {

Subtree::Subtree(std::shared_ptr<const HostTree> host, NodeSet nodes)
    : host_(std::move(host)), nodes_(std::move(nodes)) {
  if (!host_) throw DomainError("subtree without a host");
  if (nodes_.universe() != static_cast<std::size_t>(host_->size()))
    throw DomainError("subtree node set does not match its host");
  if (nodes_.empty()) throw DomainError("subtree must be non-empty");
  if (!host_->is_connected_subset(nodes_)) throw DomainError("subtree is not connected in its host");
}

Subtree Subtree::from_labels(std::shared_ptr<const HostTree> host, const std::vector<NodeId>& labels) {
  NodeSet s = host->set_of(labels);
  return Subtree(std::move(host), std::move(s));
}

bool Subtree::contains(const NodeId& n) const {
  auto i = host_->find(n);
  return i && nodes_.contains(*i);
}

bool Subtree::operator==(const Subtree& other) const {
  return (host_ == other.host_ || *host_ == *other.host_) && nodes_ == other.nodes_;
}

std::string to_string(SetRelation r) {
  switch (r) {
    case SetRelation::Disjoint: return "disjoint";
    case SetRelation::Overlap: return "overlap";
    case SetRelation::AContainsB: return "a_contains_b";
    case SetRelation::BContainsA: return "b_contains_a";
    case SetRelation::Equal: return "equal";
  }
  return "unknown";
}

std::string to_string(RelationMode m) {
  return m == RelationMode::Overlap ? "overlap" : "intersection";
}

RelationMode relation_mode_from_string(const std::string& s) {
  if (s == "overlap") return RelationMode::Overlap;
  if (s == "intersection") return RelationMode::Intersection;
  throw DomainError("unknown relation '" + s + "' (expected overlap or intersection)");
}

SetRelation set_relation(const NodeSet& a, const NodeSet& b) {
  if (!a.intersects(b)) return SetRelation::Disjoint;
  bool a_in_b = a.is_subset_of(b);
  bool b_in_a = b.is_subset_of(a);
  if (a_in_b && b_in_a) return SetRelation::Equal;
  if (b_in_a) return SetRelation::AContainsB;
  if (a_in_b) return SetRelation::BContainsA;
  return SetRelation::Overlap;
}

SetRelation set_relation(const Subtree& a, const Subtree& b) {
  if (a.host_ptr() != b.host_ptr() && !(a.host() == b.host()))
    throw DomainError("subtrees belong to different host trees");
  return set_relation(a.nodes(), b.nodes());
}

bool adjacent_under(SetRelation r, RelationMode mode) {
  if (mode == RelationMode::Overlap) return r == SetRelation::Overlap;
  return r != SetRelation::Disjoint;
}

Representation::Representation(std::shared_ptr<const HostTree> host, std::map<VertexId, Subtree> assignment)
    : host_(std::move(host)), assignment_(std::move(assignment)) {
  if (!host_) throw DomainError("representation without a host");
  for (const auto& [v, t] : assignment_)
    if (t.host_ptr() != host_ && !(t.host() == *host_))
      throw DomainError("subtree of '" + v + "' lives on a different host");
}

const Subtree& Representation::subtree(const VertexId& v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw DomainError("vertex '" + v + "' is not represented");
  return it->second;
}

std::vector<VertexId> Representation::vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, _] : assignment_) out.push_back(v);
  return out;
}

Graph derive_graph(const Representation& rep, RelationMode mode) {
  Graph g;
  std::vector<std::pair<const VertexId*, const NodeSet*>> items;
  for (const auto& [v, t] : rep.assignment()) {
    g.add_vertex(v);
    items.emplace_back(&v, &t.nodes());
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (adjacent_under(set_relation(*items[i].second, *items[j].second), mode))
        g.add_edge(*items[i].first, *items[j].first);
  return g;
}

Verdict verify_representation(const Representation& rep, const Graph& target, RelationMode mode) {
  auto vertices = rep.vertices();
  if (vertices != target.vertices())
    throw DomainError("representation and target graph have different vertex sets");
  Verdict verdict;
  std::vector<const NodeSet*> sets;
  for (const auto& v : vertices) sets.push_back(&rep.subtree(v).nodes());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& nbrs = target.neighbors(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      SetRelation r = set_relation(*sets[i], *sets[j]);
      bool expected = nbrs.contains(vertices[j]);
      if (adjacent_under(r, mode) != expected) {
        verdict.pass = false;
        verdict.mismatches.push_back({vertices[i], vertices[j], expected, r});
      }
    }
  }
  return verdict;
}

NodeSet common_nodes(const std::vector<const Subtree*>& family) {
  if (family.empty()) return {};
  NodeSet out = family.front()->nodes();
  for (const auto* t : family) out &= t->nodes();
  return out;
}

bool pairwise_intersecting(const std::vector<const Subtree*>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!family[i]->nodes().intersects(family[j]->nodes())) return false;
  return true;
}

}  // namespace sog
