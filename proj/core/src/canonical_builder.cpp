#include "sog/canonical_builder.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "sog/errors.hpp"
#include "sog/subdivision.hpp"
#include "sog/tree_analysis.hpp"

namespace sog {

namespace {

void check_coloring(const Graph& g, const Coloring& c, int k) {
  if (c.k != k) throw DomainError("colouring uses " + std::to_string(c.k) + " colours, expected " + std::to_string(k));
  if (c.colors.size() != g.vertex_count()) throw DomainError("colouring is not defined on exactly the graph's vertices");
  if (!is_proper(g, c)) throw DomainError("colouring is not proper");
}

std::string describe(const PairMismatch& m) {
  return "(" + m.first + ", " + m.second + ") expected " + (m.expected_edge ? "edge" : "non-edge") + ", got " +
         to_string(m.actual);
}

void require_verified(const Representation& rep, const Graph& target, RelationMode mode, const std::string& what) {
  Verdict v = verify_representation(rep, target, mode);
  if (!v.pass)
    throw InternalError(what + " failed " + to_string(mode) + " verification on " +
                        std::to_string(v.mismatches.size()) + " pairs, first " + describe(v.mismatches.front()));
}

// Vertex-representatives per colour class, every copy, sorted by name.
std::vector<std::vector<VertexId>> reps_by_colour(const BlockedLabels& labels, const Coloring& c) {
  std::vector<std::vector<VertexId>> out(c.k);
  for (const auto& [rep, origin] : labels.vertex_origin) out[c.color_of(origin)].push_back(rep);
  return out;
}

// A path of host nodes starting at the branching node (or a twig attachment),
// addressed by distance from its start.
struct Ray {
  std::vector<int> pos;

  int length() const { return static_cast<int>(pos.size()) - 1; }
  void add(NodeSet& s, int lo, int hi) const {
    hi = std::min(hi, length());
    for (int i = std::max(lo, 0); i <= hi; ++i) s.insert(pos[i]);
  }
};

class BlockedLayout {
 public:
  BlockedLayout(const HostTree& base, const Graph& g, const Coloring& c, BlockedGraph blocked,
                const LayoutConfig& cfg)
      : base_(base), g_(g), c_(c), cfg_(cfg) {
    out_.blocked = std::move(blocked);
  }

  CanonicalRepresentation run() {
    plan();
    build_host();
    place_gadget();
    place_vertex_reps();
    place_clique();
    out_.representation = Representation(host_, std::move(subtrees_));
    require_verified(out_.representation, out_.blocked.graph, RelationMode::Overlap, "blocked layout");
    return std::move(out_);
  }

 private:
  void plan() {
    analysis_ = analyze_tree(base_);
    k_ = analysis_.leafage;
    if (k_ < 3) throw DomainError("blocked layout needs a host with at least three leaves");
    check_coloring(g_, c_, k_);
    if (cfg_.slot_pitch < 2) throw DomainError("slot pitch must be at least 2");
    const GadgetParams& p = *out_.blocked.params;
    if (p.path_internal != 3) throw DomainError("blocked layout needs gadget paths with three internal vertices");

    if (analysis_.branching_nodes.size() == 1) {
      p_ = analysis_.branching_nodes.front();
    } else {
      p_ = -1;
      for (int b : analysis_.lastbranches)
        if (p_ == -1 || base_.degree(b) < base_.degree(p_)) p_ = b;
    }
    d_ = base_.degree(p_);
    u_ = analysis_.branching_nodes.size() == 1 ? 0 : k_ - d_ + 1;
    if (p.d != d_ || p.u != u_)
      throw DomainError("gadget parameters (" + std::to_string(p.d) + ", " + std::to_string(p.u) +
                        ") do not match the host, which needs (" + std::to_string(d_) + ", " + std::to_string(u_) +
                        ")");

    for (int i = 0; i < static_cast<int>(analysis_.twigs.size()); ++i) {
      if (analysis_.twigs[i].attachment == p_)
        p_twigs_.push_back(i);
      else
        r_twigs_.push_back(i);
    }
    if (u_ > 0) {
      for (int w : base_.neighbors(p_))
        if (analysis_.twig_of[w] == -1) w_ = w;
    }

    clique_ = out_.blocked.labels.clique_members();
    const int n = static_cast<int>(clique_.size());
    if (cfg_.overflow_length != 0 && cfg_.overflow_length != n)
      throw DomainError("overflow length must equal the number of edge-representatives and brothers (" +
                        std::to_string(n) + ")");
    n_ = n;
    s_ = n_ + 1;
    by_colour_ = reps_by_colour(out_.blocked.labels, c_);
  }

  int p_twig_slot_start() const { return s_ + 8; }
  static constexpr int kRSlotStart = 11;

  void build_host() {
    std::vector<SubdivisionRequest> requests;
    for (int i = 0; i < k_; ++i) {
      const Twig& twig = analysis_.twigs[i];
      int start = twig.attachment == p_ ? p_twig_slot_start() : kRSlotStart;
      int wanted = start + cfg_.slot_pitch * static_cast<int>(by_colour_[i].size());
      int have = static_cast<int>(twig.nodes.size());
      if (have < wanted)
        requests.push_back({base_.name(twig.nodes.back()), base_.name(*twig.attachment), wanted - have});
    }
    if (u_ > 0) requests.push_back({base_.name(p_), base_.name(w_), s_ + 4});
    Subdivision sub = subdivide_edges(base_, requests);
    host_ = std::make_shared<const HostTree>(std::move(sub.tree));

    hp_ = host_->index_of(base_.name(p_));
    out_.layout.branching_node = base_.name(p_);
    twig_rays_.resize(k_);
    for (int i = 0; i < k_; ++i) {
      const Twig& twig = analysis_.twigs[i];
      int from = host_->index_of(base_.name(*twig.attachment));
      twig_rays_[i].pos = host_->path_between(from, host_->index_of(base_.name(twig.leaf())));
    }
    if (u_ > 0) {
      conn_.pos = host_->path_between(hp_, host_->index_of(base_.name(w_)));
      NodeSet elsewhere = host_->empty_set();
      elsewhere.insert(hp_);
      conn_.add(elsewhere, 1, conn_.length() - 1);
      for (const auto& ray : twig_rays_) ray.add(elsewhere, 1, ray.length());
      r_core_ = host_->full_set() - elsewhere;
    }
    for (int i : p_twigs_) directions_.push_back(&twig_rays_[i]);
    if (u_ > 0) directions_.push_back(&conn_);
  }

  void assign(const VertexId& v, const NodeSet& s) { subtrees_.emplace(v, Subtree(host_, s)); }

  NodeSet on_ray(const Ray& r, int lo, int hi) const {
    NodeSet s = host_->empty_set();
    r.add(s, lo, hi);
    return s;
  }

  void place_gadget() {
    const BlockedLabels& labels = out_.blocked.labels;
    Gadget gadget = build_gadget(*out_.blocked.params);
    const int S = s_;

    NodeSet ts = host_->empty_set();
    ts.insert(hp_);
    for (const Ray* r : directions_) r->add(ts, 1, S);

    NodeSet tb = host_->empty_set();
    tb.insert(hp_);
    for (int i : p_twigs_) twig_rays_[i].add(tb, 1, S + 5);

    // Main paths 1..d sit on the twigs at the branching node; with side
    // paths, main path 1 runs towards the rest of the tree instead.
    std::size_t next_path = 0;
    if (u_ > 0) {
      conn_.add(tb, 1, conn_.length());
      tb |= r_core_;
      for (int i : r_twigs_) twig_rays_[i].add(tb, 1, 8);

      NodeSet tb_prime = on_ray(conn_, S + 2, conn_.length()) | r_core_;
      NodeSet ts_prime = on_ray(conn_, S + 4, conn_.length()) | r_core_;
      for (int i : r_twigs_) {
        twig_rays_[i].add(tb_prime, 1, 6);
        twig_rays_[i].add(ts_prime, 1, 1);
      }
      NodeSet b1 = ts_prime;
      for (int i : r_twigs_) twig_rays_[i].add(b1, 1, 7);
      twig_rays_[r_twigs_.front()].add(b1, 1, 9);

      const auto& path1 = gadget.main_paths[0];
      assign(path1[0], on_ray(conn_, S, S + 2));
      assign(path1[1], tb_prime);
      assign(path1[2], b1);
      assign(labels.named.at("vs_prime"), ts_prime);
      for (std::size_t j = 0; j < gadget.side_paths.size(); ++j) {
        const Ray& leg = twig_rays_[r_twigs_[j]];
        assign(gadget.side_paths[j][0], on_ray(leg, 1, 3));
        assign(gadget.side_paths[j][1], on_ray(leg, 2, 5));
        assign(gadget.side_paths[j][2], on_ray(leg, 4, 7));
      }
      out_.layout.named["vb_prime"] = tb_prime;
      out_.layout.named["vs_prime"] = ts_prime;
      r_extra_ = tb_prime | b1;
      next_path = 1;
    }
    for (int i : p_twigs_) {
      const auto& path = gadget.main_paths[next_path++];
      const Ray& leg = twig_rays_[i];
      assign(path[0], on_ray(leg, S, S + 2));
      assign(path[1], on_ray(leg, S + 1, S + 4));
      assign(path[2], on_ray(leg, S + 3, S + 6));
    }
    if (u_ == 0) out_.layout.named["vb_prime"] = subtrees_.at(labels.named.at("vb_prime")).nodes();
    assign(labels.named.at("vs"), ts);
    assign(labels.named.at("vb"), tb);
    out_.layout.named["vs"] = ts;
    out_.layout.named["vb"] = tb;
  }

  void place_vertex_reps() {
    for (int i = 0; i < k_; ++i) {
      const Ray& leg = twig_rays_[i];
      int q = analysis_.twigs[i].attachment == p_ ? p_twig_slot_start() : kRSlotStart;
      bool in_r = analysis_.twigs[i].attachment != p_;
      for (const auto& rep : by_colour_[i]) {
        assign(rep, on_ray(leg, q, q + 1));
        near_[rep] = {leg.pos[q], in_r};
        q += cfg_.slot_pitch;
      }
    }
  }

  // Subtree spanned by the branching node and the near nodes of `reps`,
  // before overflow extension.
  NodeSet spanned(const std::vector<VertexId>& reps) const {
    NodeSet s = host_->empty_set();
    s.insert(hp_);
    bool enters_r = false;
    for (const auto& rep : reps) {
      const auto& [node, in_r] = near_.at(rep);
      for (int x : host_->path_between(hp_, node)) s.insert(x);
      enters_r = enters_r || in_r;
    }
    if (enters_r) s |= r_extra_;
    return s;
  }

  void place_clique() {
    const BlockedLabels& labels = out_.blocked.labels;
    std::map<VertexId, NodeSet> pre;
    for (const auto& x : clique_) {
      if (labels.role.at(x) == Role::Brother) {
        auto owner = std::find_if(labels.brother_of.begin(), labels.brother_of.end(),
                                  [&](const auto& kv) { return kv.second == x; });
        pre[x] = spanned({owner->first});
      } else {
        const Edge& e = labels.edge_origin.at(x);
        char copy = labels.copy.at(x);
        pre[x] = spanned({vertex_rep_name(copy, e.first), vertex_rep_name(copy, e.second)});
      }
    }

    // Smaller sets get longer stretches of every overflow path they do not
    // already cross, so nested sets become overlapping ones.
    std::map<VertexId, NodeSet> grown = pre;
    for (const Ray* dir : directions_) {
      std::vector<std::pair<std::size_t, VertexId>> order;
      for (const auto& [x, s] : pre)
        if (!s.contains(dir->pos[s_])) order.emplace_back(s.count(), x);
      std::sort(order.begin(), order.end());
      for (std::size_t r = 0; r < order.size(); ++r) dir->add(grown[order[r].second], 1, n_ - static_cast<int>(r));
    }
    for (auto& [x, s] : grown) assign(x, s);
  }

  const HostTree& base_;
  const Graph& g_;
  const Coloring& c_;
  LayoutConfig cfg_;
  CanonicalRepresentation out_;

  TreeAnalysis analysis_;
  int k_ = 0, d_ = 0, u_ = 0;
  int p_ = -1, w_ = -1, hp_ = -1;
  int n_ = 0, s_ = 0;
  std::vector<int> p_twigs_, r_twigs_;
  std::vector<VertexId> clique_;
  std::vector<std::vector<VertexId>> by_colour_;

  std::shared_ptr<const HostTree> host_;
  std::vector<Ray> twig_rays_;
  Ray conn_;
  std::vector<const Ray*> directions_;
  NodeSet r_core_;
  NodeSet r_extra_;
  std::map<VertexId, std::pair<int, bool>> near_;
  std::map<VertexId, Subtree> subtrees_;
};

}  // namespace

CanonicalRepresentation represent_blocked_on_star(const Graph& g, const Coloring& c, const GadgetParams& p,
                                                  const LayoutConfig& cfg) {
  p.validate();
  if (p.u != 0 || p.d != c.k)
    throw DomainError("star layout needs gadget parameters (k, 0) with k the number of colours");
  HostTree star = trees::star(c.k);
  return BlockedLayout(star, g, c, build_blocked_graph(g, p), cfg).run();
}

CanonicalRepresentation represent_blocked_on_subdivision(const HostTree& t, const Graph& g, const Coloring& c,
                                                         const LayoutConfig& cfg) {
  ReductionParams params = reduction_params_for_tree(t);
  return BlockedLayout(t, g, c, build_blocked_graph(g, params.gadget), cfg).run();
}

CanonicalRepresentation represent_empty_blocked_subpaths(const Graph& g, const Coloring& c, int k) {
  if (k < 3) throw DomainError("subpath layout needs k >= 3");
  check_coloring(g, c, k);
  CanonicalRepresentation out;
  out.blocked = build_empty_blocked(g);
  const BlockedLabels& labels = out.blocked.labels;
  const auto by_colour = reps_by_colour(labels, c);
  const int spine = 6 * static_cast<int>(g.vertex_count()) + 1;

  auto leg = [](int i) { return "leg" + std::to_string(i + 1); };
  auto spine_node = [&](int i, int j) { return leg(i) + ".spine" + std::to_string(j); };
  auto pendant = [&](int i, int j, int m) {
    return leg(i) + ".pend" + std::to_string(j) + "." + std::to_string(m);
  };

  std::vector<NodeId> nodes{"c"};
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = 1; j <= spine; ++j) {
      nodes.push_back(spine_node(i, j));
      edges.emplace_back(j == 1 ? NodeId("c") : spine_node(i, j - 1), spine_node(i, j));
      for (int m = 1; m <= 3; ++m) {
        nodes.push_back(pendant(i, j, m));
        edges.emplace_back(m == 1 ? spine_node(i, j) : pendant(i, j, m - 1), pendant(i, j, m));
      }
    }
  }
  auto host = std::make_shared<const HostTree>(HostTree::from_lists(nodes, edges));
  out.layout.branching_node = "c";

  // Route from the centre to the first pendant node of a representative.
  std::map<VertexId, std::vector<NodeId>> route;
  std::map<VertexId, std::pair<int, int>> slot;
  std::map<VertexId, Subtree> subtrees;
  for (int i = 0; i < k; ++i) {
    for (int j = 1; j <= static_cast<int>(by_colour[i].size()); ++j) {
      const auto& rep = by_colour[i][j - 1];
      slot[rep] = {i, j};
      subtrees.emplace(rep, Subtree::from_labels(host, {pendant(i, j, 1), pendant(i, j, 2), pendant(i, j, 3)}));
      std::vector<NodeId> r{"c"};
      for (int s = 1; s <= j; ++s) r.push_back(spine_node(i, s));
      r.push_back(pendant(i, j, 1));
      route[rep] = std::move(r);
    }
  }
  for (const auto& [rep, bro] : labels.brother_of) {
    auto r = route.at(rep);
    auto [i, j] = slot.at(rep);
    r.push_back(pendant(i, j, 2));
    subtrees.emplace(bro, Subtree::from_labels(host, r));
  }
  for (const auto& [x, e] : labels.edge_origin) {
    char copy = labels.copy.at(x);
    auto r = route.at(vertex_rep_name(copy, e.first));
    const auto& other = route.at(vertex_rep_name(copy, e.second));
    r.insert(r.end(), other.begin() + 1, other.end());
    subtrees.emplace(x, Subtree::from_labels(host, r));
  }
  out.representation = Representation(host, std::move(subtrees));
  require_verified(out.representation, out.blocked.graph, RelationMode::Overlap, "subpath layout");
  require_verified(out.representation, out.blocked.graph, RelationMode::Intersection, "subpath layout");
  return out;
}

std::vector<std::pair<VertexId, VertexId>> find_illegal_pairs(const Representation& rep,
                                                              const BlockedLabels& labels,
                                                              const Graph& original) {
  std::map<std::pair<char, VertexId>, VertexId> rep_of;
  for (const auto& [x, origin] : labels.vertex_origin) {
    if (!original.has_vertex(origin))
      throw DomainError("label origin '" + origin + "' is not a vertex of the original graph");
    if (!rep.assignment().contains(x)) throw DomainError("representation has no subtree for '" + x + "'");
    rep_of[{labels.copy.at(x), origin}] = x;
  }

  TreeAnalysis a = analyze_tree(rep.host());
  auto twigs_met = [&](const VertexId& x) {
    std::set<int> met;
    for (int node : rep.subtree(x).nodes().elements())
      if (a.twig_of[node] >= 0) met.insert(a.twig_of[node]);
    return met;
  };

  std::vector<std::pair<VertexId, VertexId>> out;
  for (char copy : kCopies) {
    for (const auto& e : original.edges()) {
      auto x = rep_of.find({copy, e.first});
      auto y = rep_of.find({copy, e.second});
      if (x == rep_of.end() || y == rep_of.end()) continue;
      auto mx = twigs_met(x->second);
      auto my = twigs_met(y->second);
      bool shared = std::any_of(mx.begin(), mx.end(), [&](int t) { return my.contains(t); });
      if (shared) out.emplace_back(std::min(x->second, y->second), std::max(x->second, y->second));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sog
