#include "sogkit/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sog/audit.hpp"
#include "sog/blocked_graph.hpp"
#include "sog/canonical_builder.hpp"
#include "sog/decode.hpp"
#include "sog/dot.hpp"
#include "sog/errors.hpp"
#include "sog/json_io.hpp"
#include "sog/search.hpp"
#include "sog/tree_analysis.hpp"

namespace sogkit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  std::string out;
  std::string format = "json";
  int jobs = 1;
  double budget = 0;
};

class CommandError : public std::runtime_error {
 public:
  CommandError(const std::string& what, Status status = Status::Fail) : std::runtime_error(what), status(status) {}
  Status status;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw CommandError("cannot write '" + tmp.string() + "'");
    file << content;
    if (!file.flush()) throw CommandError("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw CommandError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

// Routes a document either to --out (atomically, as an artifact) or to stdout.
class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out, CommandOutcome& outcome) : g_(g), out_(out), outcome_(outcome) {}

  void primary(const std::string& document) {
    if (g_.out.empty()) {
      out_ << document;
    } else {
      write_atomically(g_.out, document);
      outcome_.artifacts.push_back(g_.out);
    }
  }

  void extra(const std::string& path, const std::string& document) {
    if (path.empty()) return;
    write_atomically(path, document);
    outcome_.artifacts.push_back(path);
  }

 private:
  const Globals& g_;
  std::ostream& out_;
  CommandOutcome& outcome_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

sog::RelationMode relation_of(const std::string& s) { return sog::relation_mode_from_string(s); }

sog::Coloring coloring_for(const sog::Graph& g, int k, const std::string& path) {
  if (!path.empty()) return sog::json::read_coloring(read_file(path));
  auto c = sog::find_k_coloring(g, k);
  if (!c) throw CommandError("graph has no proper " + std::to_string(k) + "-colouring");
  return *c;
}

json verdict_json(const sog::Verdict& v) {
  json mismatches = json::array();
  for (const auto& m : v.mismatches)
    mismatches.push_back({{"pair", {m.first, m.second}}, {"expected_edge", m.expected_edge},
                          {"actual", sog::to_string(m.actual)}});
  return {{"pass", v.pass}, {"mismatches", mismatches}};
}

json stats_json(const sog::SearchStats& s) {
  return {{"hosts_total", s.hosts_total}, {"hosts_examined", s.hosts_examined}, {"steps", s.steps},
          {"seconds", s.seconds}};
}

json audit_json(const sog::AuditReport& r) {
  return {{"audit", r.name},
          {"timed_out", r.timed_out},
          {"hosts_total", r.hosts_total},
          {"hosts_examined", r.hosts_examined},
          {"representations_found", r.representations_found},
          {"pairs_checked", r.pairs_checked},
          {"violations", r.violations},
          {"counterexamples", r.counterexamples},
          {"seconds", r.seconds}};
}

struct Options {
  // reduce / represent / decode / recognize / verify / export
  std::string input, graph, tree, coloring, rep, labels, blocked, labels_out, blocked_out, witness_out, vertex;
  std::string mode = "star", relation = "overlap", lemma;
  int k = 0;
  bool empty = false, amplify = false, paths_only = false, negative_control = false, no_symmetry = false;
  int leafage = 0, max_degree = 0, max_host = 8, min_host = 2, d = 3;
  std::string subdivision_of, host;
};

void cmd_reduce(const Options& o, const Globals& g, Emitter& emit) {
  sog::Graph graph = sog::json::read_graph(read_file(o.input));
  if (o.amplify) graph = sog::amplify_3con(graph);
  sog::BlockedGraph b;
  if (o.empty) {
    b = sog::build_empty_blocked(graph);
  } else if (!o.tree.empty()) {
    auto params = sog::reduction_params_for_tree(sog::json::read_tree(read_file(o.tree)));
    if (o.k != 0 && o.k != params.k)
      throw CommandError("--k " + std::to_string(o.k) + " disagrees with the tree's leafage " + std::to_string(params.k));
    b = sog::build_blocked_graph(graph, params.gadget);
  } else {
    if (o.k == 0) throw CommandError("reduce needs --k or --tree");
    b = sog::build_blocked_graph(graph, sog::reduction_params_for_k(o.k).gadget);
  }
  emit.primary(g.format == "dot" ? sog::dot::write_graph(b.graph, "blocked") : sog::json::write_blocked(b));
}

void cmd_represent(const Options& o, const Globals& g, Emitter& emit) {
  sog::Graph graph = sog::json::read_graph(read_file(o.graph));
  sog::CanonicalRepresentation r;
  if (o.mode == "star") {
    if (o.k < 3) throw CommandError("star mode needs --k >= 3");
    r = sog::represent_blocked_on_star(graph, coloring_for(graph, o.k, o.coloring), {o.k, 0, 3});
  } else if (o.mode == "subdivision") {
    if (o.tree.empty()) throw CommandError("subdivision mode needs --tree");
    sog::HostTree t = sog::json::read_tree(read_file(o.tree));
    int k = sog::reduction_params_for_tree(t).k;
    if (o.k != 0 && o.k != k) throw CommandError("--k disagrees with the tree's leafage " + std::to_string(k));
    r = sog::represent_blocked_on_subdivision(t, graph, coloring_for(graph, k, o.coloring));
  } else if (o.mode == "subpaths") {
    if (o.k < 3) throw CommandError("subpaths mode needs --k >= 3");
    r = sog::represent_empty_blocked_subpaths(graph, coloring_for(graph, o.k, o.coloring), o.k);
  } else {
    throw CommandError("unknown mode '" + o.mode + "'");
  }
  emit.primary(g.format == "dot" ? sog::dot::write_tree(r.representation.host(), std::nullopt, "host")
                                 : sog::json::write_representation(r.representation));
  emit.extra(o.labels_out, sog::json::write_labels(r.blocked.labels));
  emit.extra(o.blocked_out, sog::json::write_blocked(r.blocked));
}

bool cmd_verify(const Options& o, Emitter& emit) {
  sog::Representation rep = sog::json::read_representation(read_file(o.rep));
  sog::Graph target;
  if (!o.blocked.empty())
    target = sog::json::read_blocked(read_file(o.blocked)).graph;
  else if (!o.graph.empty())
    target = sog::json::read_graph(read_file(o.graph));
  else
    throw CommandError("verify needs --graph or --blocked");
  sog::Verdict v = sog::verify_representation(rep, target, relation_of(o.relation));
  emit.primary(dump(verdict_json(v)));
  return v.pass;
}

void cmd_decode(const Options& o, Emitter& emit) {
  sog::Representation rep = sog::json::read_representation(read_file(o.rep));
  sog::BlockedLabels labels = sog::json::read_labels(read_file(o.labels));
  sog::Graph graph = sog::json::read_graph(read_file(o.graph));
  sog::DecodedColoring d = sog::decode_coloring(rep, labels, graph, o.k);
  json witnesses = json::object();
  for (const auto& [colour, id] : d.witnesses) witnesses[std::to_string(colour)] = id;
  json colors = json::object();
  for (const auto& [v, c] : d.coloring.colors) colors[v] = c;
  emit.primary(dump({{"copy", std::string(1, d.copy)},
                     {"k", d.coloring.k},
                     {"colors", colors},
                     {"witnesses", witnesses},
                     {"proper", sog::is_proper(graph, d.coloring)}}));
}

sog::SearchConfig search_config(const Options& o, const Globals& g) {
  sog::SearchConfig cfg;
  cfg.max_host_nodes = o.max_host;
  cfg.min_host_nodes = o.min_host;
  cfg.relation = relation_of(o.relation);
  cfg.shape = o.paths_only ? sog::SubtreeShape::PathsOnly : sog::SubtreeShape::Any;
  cfg.time_budget = g.budget;
  cfg.jobs = g.jobs;
  cfg.symmetry_breaking = !o.no_symmetry;
  int chosen = (o.leafage > 0) + (o.max_degree > 0) + !o.subdivision_of.empty() + !o.host.empty();
  if (chosen > 1) throw CommandError("choose at most one of --leafage, --max-degree, --subdivision-of, --host");
  if (o.leafage > 0) {
    cfg.constraint = sog::HostConstraint::MaxLeafage;
    cfg.bound = o.leafage;
  } else if (o.max_degree > 0) {
    cfg.constraint = sog::HostConstraint::MaxDegree;
    cfg.bound = o.max_degree;
  } else if (!o.subdivision_of.empty()) {
    cfg.constraint = sog::HostConstraint::SubdivisionOf;
    cfg.base = sog::json::read_tree(read_file(o.subdivision_of));
  } else if (!o.host.empty()) {
    cfg.constraint = sog::HostConstraint::Fixed;
    cfg.base = sog::json::read_tree(read_file(o.host));
  }
  return cfg;
}

Status cmd_recognize(const Options& o, const Globals& g, Emitter& emit) {
  sog::Graph graph = sog::json::read_graph(read_file(o.graph));
  sog::SearchResult r = sog::find_representation(graph, search_config(o, g));
  json doc = {{"status", sog::to_string(r.status)}, {"stats", stats_json(r.stats)}};
  if (r.representation) {
    doc["representation"] = json::parse(sog::json::write_representation(*r.representation));
    emit.extra(o.witness_out, sog::json::write_representation(*r.representation));
  }
  emit.primary(dump(doc));
  return r.status == sog::SearchStatus::Timeout ? Status::Timeout : Status::Ok;
}

Status cmd_audit(const Options& o, const Globals& g, Emitter& emit, CommandOutcome& outcome) {
  sog::SearchConfig cfg = search_config(o, g);
  sog::AuditReport r;
  std::string kind;
  if (o.lemma == "containment" || o.lemma == "leaves") {
    r = sog::audit_gadget_lemmas(o.d, cfg);
    kind = o.lemma;
  } else if (o.lemma == "spanbranch") {
    r = sog::audit_spanbranch(cfg, o.negative_control ? 1 : 2);
    kind = "spanbranch";
  } else {
    throw CommandError("unknown lemma '" + o.lemma + "'");
  }
  emit.primary(dump(audit_json(r)));
  if (r.timed_out) {
    outcome.diagnostics.push_back("audit ran out of time after " + std::to_string(r.hosts_examined) + " of " +
                                  std::to_string(r.hosts_total) + " hosts");
    return Status::Timeout;
  }
  if (r.violation_count(kind) > 0) {
    outcome.diagnostics.push_back(std::to_string(r.violation_count(kind)) + " " + kind + " counterexamples");
    return Status::Fail;
  }
  return Status::Ok;
}

void cmd_analyze(const Options& o, Emitter& emit) {
  sog::HostTree t = sog::json::read_tree(read_file(o.tree));
  emit.primary(sog::json::write_analysis(t, sog::analyze_tree(t)));
}

void cmd_export(const Options& o, Emitter& emit) {
  if (!o.rep.empty()) {
    sog::Representation rep = sog::json::read_representation(read_file(o.rep));
    std::optional<sog::NodeSet> highlight;
    if (!o.vertex.empty()) highlight = rep.subtree(o.vertex).nodes();
    emit.primary(sog::dot::write_tree(rep.host(), highlight, "host"));
  } else if (!o.tree.empty()) {
    emit.primary(sog::dot::write_tree(sog::json::read_tree(read_file(o.tree))));
  } else if (!o.graph.empty()) {
    emit.primary(sog::dot::write_graph(sog::json::read_graph(read_file(o.graph))));
  } else {
    throw CommandError("export needs --graph, --tree or --rep");
  }
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return kExitOk;
    case Status::Fail: return kExitFail;
    case Status::Timeout: return kExitTimeout;
  }
  return kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reductions, canonical representations and exhaustive search for subtree overlap graphs", "sogkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  Options o;
  app.add_option("--out", g.out, "Write the main document to this file");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--jobs", g.jobs, "Worker threads for search commands")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Time budget in seconds (0 = unlimited)")->check(CLI::NonNegativeNumber);

  auto* reduce = app.add_subcommand("reduce", "Build the blocked graph of a graph");
  reduce->add_option("--input", o.input, "Graph JSON")->required();
  reduce->add_option("--k", o.k, "Number of colours");
  reduce->add_option("--tree", o.tree, "Host tree JSON fixing the gadget parameters");
  reduce->add_flag("--empty", o.empty, "Build the gadget-free variant");
  reduce->add_flag("--amplify", o.amplify, "Make the input 3-connected first");

  auto* represent = app.add_subcommand("represent", "Build a canonical representation from a colouring");
  represent->add_option("--mode", o.mode, "Layout")->check(CLI::IsMember({"star", "subdivision", "subpaths"}));
  represent->add_option("--graph", o.graph, "Graph JSON")->required();
  represent->add_option("--tree", o.tree, "Host tree JSON (subdivision mode)");
  represent->add_option("--k", o.k, "Number of colours");
  represent->add_option("--coloring", o.coloring, "Colouring JSON; found by search when omitted");
  represent->add_option("--labels-out", o.labels_out, "Also write the blocked labels here");
  represent->add_option("--blocked-out", o.blocked_out, "Also write the blocked graph here");

  auto* verify = app.add_subcommand("verify", "Check a representation against a graph");
  verify->add_option("--rep", o.rep, "Representation JSON")->required();
  verify->add_option("--graph", o.graph, "Target graph JSON");
  verify->add_option("--blocked", o.blocked, "Target blocked graph JSON");
  verify->add_option("--relation", o.relation, "Relation")->check(CLI::IsMember({"overlap", "intersection"}));

  auto* decode = app.add_subcommand("decode", "Read a colouring off a blocked representation");
  decode->add_option("--rep", o.rep, "Representation JSON")->required();
  decode->add_option("--labels", o.labels, "Labels or blocked graph JSON")->required();
  decode->add_option("--graph", o.graph, "Original graph JSON")->required();
  decode->add_option("--k", o.k, "Number of colours")->required();

  auto add_host_options = [&](CLI::App* cmd) {
    cmd->add_option("--leafage", o.leafage, "Hosts with at most this many leaves");
    cmd->add_option("--max-degree", o.max_degree, "Hosts with at most this degree");
    cmd->add_option("--subdivision-of", o.subdivision_of, "Hosts subdividing this tree");
    cmd->add_option("--host", o.host, "A single fixed host");
    cmd->add_option("--max-host", o.max_host, "Largest host size");
    cmd->add_option("--min-host", o.min_host, "Smallest host size");
    cmd->add_option("--relation", o.relation, "Relation")->check(CLI::IsMember({"overlap", "intersection"}));
    cmd->add_flag("--paths-only", o.paths_only, "Only path subtrees");
    cmd->add_flag("--no-symmetry", o.no_symmetry, "Disable first-vertex symmetry breaking");
  };
  auto* recognize = app.add_subcommand("recognize", "Exhaustively search for a representation");
  recognize->add_option("--graph", o.graph, "Graph JSON")->required();
  recognize->add_option("--witness-out", o.witness_out, "Write a found representation here");
  add_host_options(recognize);

  auto* audit = app.add_subcommand("audit", "Exhaustively check a structural claim on small hosts");
  audit->add_option("--lemma", o.lemma, "Claim")->required()->check(
      CLI::IsMember({"containment", "leaves", "spanbranch"}));
  audit->add_option("--d", o.d, "Gadget parameter d");
  audit->add_flag("--negative-control", o.negative_control, "Spanbranch with boundary counts one short");
  add_host_options(audit);

  auto* analyze = app.add_subcommand("analyze", "Leaves, twigs and lastbranches of a tree");
  analyze->add_option("--tree", o.tree, "Tree JSON")->required();

  auto* exp = app.add_subcommand("export", "DOT rendering of a graph, tree or representation");
  exp->add_option("--graph", o.graph, "Graph JSON");
  exp->add_option("--tree", o.tree, "Tree JSON");
  exp->add_option("--rep", o.rep, "Representation JSON");
  exp->add_option("--vertex", o.vertex, "Highlight this vertex's subtree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sogkit: usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  CommandOutcome outcome;
  Emitter emit(g, out, outcome);
  try {
    if (*reduce) cmd_reduce(o, g, emit);
    else if (*represent) cmd_represent(o, g, emit);
    else if (*verify) outcome.status = cmd_verify(o, emit) ? Status::Ok : Status::Fail;
    else if (*decode) cmd_decode(o, emit);
    else if (*recognize) outcome.status = cmd_recognize(o, g, emit);
    else if (*audit) outcome.status = cmd_audit(o, g, emit, outcome);
    else if (*analyze) cmd_analyze(o, emit);
    else if (*exp) cmd_export(o, emit);
    if (outcome.status == Status::Fail && outcome.diagnostics.empty())
      outcome.diagnostics.push_back("verification failed");
  } catch (const sog::ParseError& e) {
    outcome.status = Status::Fail;
    outcome.diagnostics.push_back(e.line() ? "parse error at line " + std::to_string(e.line()) + ", column " +
                                                 std::to_string(e.column()) + ": " + e.what()
                                           : std::string("parse error: ") + e.what());
  } catch (const CommandError& e) {
    outcome.status = e.status;
    outcome.diagnostics.push_back(e.what());
  } catch (const sog::NoNiceCopyError& e) {
    outcome.status = Status::Fail;
    outcome.diagnostics.push_back(std::string("no nice copy: ") + e.what());
  } catch (const std::exception& e) {
    outcome.status = Status::Fail;
    outcome.diagnostics.push_back(e.what());
  }

  for (const auto& d : outcome.diagnostics) err << "sogkit: " << d << "\n";
  static const char* names[] = {"ok", "fail", "timeout"};
  if (!g.out.empty())
    out << dump({{"status", names[static_cast<int>(outcome.status)]},
                 {"artifacts", outcome.artifacts},
                 {"diagnostics", outcome.diagnostics}});
  return exit_code(outcome.status);
}

}  // namespace sogkit
