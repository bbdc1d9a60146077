// Runs every acceptance criterion and prints one PASS/FAIL line for each.
//
//   sog_acceptance [--expect-fail N]...
//
// The exit status is 0 iff the set of failing criteria equals the set given
// with --expect-fail, so a criterion that starts passing is reported too.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sog/audit.hpp"
#include "sog/blocked_graph.hpp"
#include "sog/canonical_builder.hpp"
#include "sog/coloring.hpp"
#include "sog/connectivity.hpp"
#include "sog/decode.hpp"
#include "sog/gadget.hpp"
#include "sog/json_io.hpp"
#include "sog/search.hpp"
#include "sog/subdivision.hpp"
#include "sog/tree_analysis.hpp"

using namespace sog;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << what;
      pass = false;
    }
  }
};

std::shared_ptr<const HostTree> shared(HostTree t) { return std::make_shared<const HostTree>(std::move(t)); }

Coloring colour(const Graph& g, int k) { return *find_k_coloring(g, k); }

bool proper_subset(const NodeSet& a, const NodeSet& b) { return a.is_subset_of(b) && a != b; }

void amplification(Outcome& o) {
  int graphs = 0;
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::connected_graphs(n)) {
      ++graphs;
      Graph a = amplify_3con(g);
      o.require(vertex_connectivity(a) >= 3 && oracle::connectivity(a) >= 3, "connectivity below 3");
      for (int k : {3, 4}) {
        bool source = oracle::colorable(g, k);
        auto c = find_k_coloring(a, k);
        // A colouring of the amplified graph is certified by properness; its
        // absence is forced when the embedded copy of g is not colourable.
        o.require(c.has_value() == source, "colourability differs at k=" + std::to_string(k));
        if (c) o.require(is_proper(a, *c), "improper colouring");
      }
    }
  o.detail << graphs << " graphs";
}

void star_round_trip(Outcome& o) {
  for (auto [name, g] : {std::pair{"K33", named::complete_bipartite(3, 3)}, std::pair{"prism", named::prism()}}) {
    Coloring c = colour(g, 3);
    c.k = 3;
    CanonicalRepresentation cr = represent_blocked_on_star(g, c, {3, 0});
    BlockedGraph target = build_blocked_graph(g, {3, 0});
    std::string n = name;
    o.require(verify_representation(cr.representation, target.graph, RelationMode::Overlap).pass, n + " does not verify");
    o.require(analyze_tree(cr.representation.host()).leafage == 3, n + " leafage is not 3");
    o.require(find_illegal_pairs(cr.representation, target.labels, g).empty(), n + " has illegal pairs");
    DecodedColoring d = decode_coloring(cr.representation, target.labels, g, 3);
    o.require(is_proper(g, d.coloring) && d.coloring.k == 3, n + " decodes to an improper colouring");
    o.detail << n << " host " << cr.representation.host().size() << " nodes; ";
  }
}

void subdivision_round_trip(Outcome& o) {
  Graph g = named::wheel(5);
  HostTree t = trees::double_star(2);
  CanonicalRepresentation cr = represent_blocked_on_subdivision(t, g, colour(g, 4));
  BlockedGraph target = build_blocked_graph(g, reduction_params_for_tree(t).gadget);
  o.require(verify_representation(cr.representation, target.graph, RelationMode::Overlap).pass, "does not verify");
  o.require(is_subdivision_of(cr.representation.host(), t), "host is not a subdivision of the double star");
  const auto& L = cr.layout.named;
  o.require(proper_subset(L.at("vs_prime"), L.at("vb_prime")), "t_s' not inside t_b'");
  o.require(proper_subset(L.at("vb_prime"), L.at("vb")), "t_b' not inside t_b");
  o.require(!L.at("vs").intersects(L.at("vb_prime")), "t_s meets t_b'");
  DecodedColoring d = decode_coloring(cr.representation, target.labels, g, 4);
  o.require(is_proper(g, d.coloring), "decoded colouring is improper");
  o.detail << "host " << cr.representation.host().size() << " nodes";
}

void subpath_round_trip(Outcome& o) {
  for (auto [name, g, k] : {std::tuple{"prism", named::prism(), 3}, std::tuple{"K4", named::complete(4), 4}}) {
    std::string n = name;
    CanonicalRepresentation cr = represent_empty_blocked_subpaths(g, colour(g, k), k);
    const Representation& rep = cr.representation;
    BlockedGraph target = build_empty_blocked(g);
    o.require(verify_representation(rep, target.graph, RelationMode::Overlap).pass, n + " fails in overlap mode");
    o.require(verify_representation(rep, target.graph, RelationMode::Intersection).pass,
              n + " fails in intersection mode");
    o.require(analyze_tree(rep.host()).max_degree == k, n + " host max degree differs from k");
    bool paths = true;
    for (const auto& [v, s] : rep.assignment()) paths = paths && s.is_path();
    o.require(paths, n + " has a non-path subtree");
    std::vector<const Subtree*> family;
    for (const auto& v : target.labels.clique_members()) family.push_back(&rep.subtree(v));
    o.require(!common_nodes(family).empty(), n + " has no common node");
    o.detail << n << " host " << rep.host().size() << " nodes; ";
  }
}

void lemma_audits(Outcome& o) {
  SearchConfig gadget;
  gadget.max_host_nodes = 9;
  gadget.jobs = 4;
  AuditReport g = audit_gadget_lemmas(3, gadget);
  SearchConfig span;
  span.max_host_nodes = 8;
  AuditReport s = audit_spanbranch(span);
  AuditReport control = audit_spanbranch(span, 1);
  o.detail << "gadget: " << g.hosts_examined << "/" << g.hosts_total << " hosts, " << g.representations_found
           << " representations, " << g.violation_count("containment") << " containment and "
           << g.violation_count("leaves") << " leaf violations; spanbranch: " << s.pairs_checked << " pairs, "
           << s.violation_count() << " violations; control: " << control.violation_count() << " violations. ";
  o.require(!g.timed_out && !s.timed_out && !control.timed_out, "timed out");
  o.require(g.violation_count() == 0, "gadget lemma violated");
  o.require(s.violation_count() == 0, "spanbranch violated");
  o.require(control.violation_count() > 0, "negative control did not fire");
  o.require(g.representations_found >= 1, "no representation of the gadget on hosts up to 9 nodes");
}

void subdivision_invariance(Outcome& o) {
  std::mt19937 rng(2024);
  int pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph original = oracle::random_graph(2 + trial % 4, 0.6, rng);
    auto host = shared(oracle::random_tree(2 + trial % 14, rng));
    BlockedLabels labels;
    std::map<VertexId, Subtree> assignment;
    for (char copy : kCopies)
      for (const auto& v : original.vertices()) {
        VertexId x = vertex_rep_name(copy, v);
        labels.role[x] = Role::VertexRep;
        labels.copy[x] = copy;
        labels.vertex_origin[x] = v;
        assignment.emplace(x, Subtree(host, oracle::random_subtree(*host, rng)));
      }
    Representation rep(host, assignment);
    Graph ov = derive_graph(rep, RelationMode::Overlap);
    Graph in = derive_graph(rep, RelationMode::Intersection);
    auto illegal = find_illegal_pairs(rep, labels, original);
    int steps = 1 + trial % 5;
    for (int step = 0; step < steps; ++step) {
      auto edges = rep.host().named_edges();
      auto [a, b] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      Subdivision s = subdivide(rep.host(), a, b, std::uniform_int_distribution<int>(1, 3)(rng));
      rep = lift_representation(rep, shared(s.tree), s.node_map);
    }
    o.require(graphs_equal(derive_graph(rep, RelationMode::Overlap), ov), "overlap graph changed");
    o.require(graphs_equal(derive_graph(rep, RelationMode::Intersection), in), "intersection graph changed");
    o.require(find_illegal_pairs(rep, labels, original) == illegal, "illegal pairs changed");
    pairs += !illegal.empty();
  }
  o.detail << "200 pairs, " << pairs << " with illegal pairs";
}

Graph broken_wheel() {
  return Graph::from_lists({"h", "r0", "r1", "r2", "s01", "s12", "s20"},
                           {{"h", "r0"}, {"h", "r1"}, {"h", "r2"}, {"r0", "s01"}, {"s01", "r1"}, {"r1", "s12"},
                            {"s12", "r2"}, {"r2", "s20"}, {"s20", "r0"}});
}

void cross_oracle(Outcome& o) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 6;
    Graph g = oracle::interval_overlap_graph(oracle::random_interval_model(n, rng));
    SearchConfig cfg;
    cfg.constraint = HostConstraint::MaxLeafage;
    cfg.bound = 2;
    cfg.min_host_nodes = 1;
    cfg.max_host_nodes = std::max(2, 2 * n);
    SearchResult r = find_representation(g, cfg);
    o.require(r.status == SearchStatus::Found, "missed an interval-overlap model on " + std::to_string(n) + " vertices");
    if (r.representation)
      o.require(verify_representation(*r.representation, g, RelationMode::Overlap).pass, "unverified witness");
  }
  for (auto [name, g] : {std::pair{"W5", named::wheel(5)}, std::pair{"BW3", broken_wheel()}}) {
    SearchConfig cfg;
    cfg.constraint = HostConstraint::MaxLeafage;
    cfg.bound = 2;
    cfg.max_host_nodes = 2 * static_cast<int>(g.vertex_count());
    SearchResult r = find_representation(g, cfg);
    o.require(r.status == SearchStatus::BoundedAbsent, std::string(name) + " not reported absent");
    o.detail << name << " " << to_string(r.status) << " in " << r.stats.seconds << " s; ";
  }
}

void construction_arithmetic(Outcome& o) {
  oracle::JsonCounts gadget = oracle::count_graph_json(json::write_graph(build_gadget({3, 0}).graph));
  oracle::JsonCounts k4 = oracle::count_graph_json(json::write_graph(build_blocked_graph(named::complete(4), {3, 0}).graph));
  o.require(gadget.well_formed && gadget.vertices == 11 && gadget.edges == 12, "gadget counts differ");
  o.require(k4.well_formed && k4.vertices == 95 && k4.edges == 1998, "blocked K4 counts differ");
  o.detail << "gadget " << gadget.vertices << "/" << gadget.edges << ", blocked K4 " << k4.vertices << "/" << k4.edges;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: sog_acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"amplification correctness", amplification},
      {"star round-trip", star_round_trip},
      {"subdivision round-trip", subdivision_round_trip},
      {"subpath round-trip", subpath_round_trip},
      {"lemma audits", lemma_audits},
      {"subdivision invariance", subdivision_invariance},
      {"cross-oracle consistency", cross_oracle},
      {"construction arithmetic", construction_arithmetic},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::printf("criterion %d %-26s %s (%.2f s) %s\n", id, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", seconds,
                o.detail.str().c_str());
    std::fflush(stdout);
  }

  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    for (int id : failed)
      if (!expected.contains(id)) std::printf("unexpected failure: criterion %d\n", id);
    for (int id : expected)
      if (!failed.contains(id)) std::printf("expected failure now passes: criterion %d\n", id);
    return 1;
  }
  return 0;
}
