#include "sog/audit.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "sog/errors.hpp"
#include "sog/gadget.hpp"
#include "sog/tree_analysis.hpp"
#include "sog/tree_enumeration.hpp"

namespace sog {

std::uint64_t AuditReport::violation_count() const {
  std::uint64_t total = 0;
  for (const auto& [kind, n] : violations) total += n;
  return total;
}

std::uint64_t AuditReport::violation_count(const std::string& kind) const {
  auto it = violations.find(kind);
  return it == violations.end() ? 0 : it->second;
}

namespace {

std::vector<std::uint64_t> neighbour_masks(const HostTree& t) {
  std::vector<std::uint64_t> out(t.size(), 0);
  for (int v = 0; v < t.size(); ++v)
    for (int w : t.neighbors(v)) out[v] |= std::uint64_t{1} << w;
  return out;
}

int leaves_in(const std::vector<std::uint64_t>& nbr, std::uint64_t mask) {
  if (__builtin_popcountll(mask) == 1) return 1;
  int leaves = 0;
  for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
    int v = __builtin_ctzll(bits);
    leaves += __builtin_popcountll(nbr[v] & mask) == 1;
  }
  return leaves;
}

int boundary_in(const std::vector<std::uint64_t>& nbr, std::uint64_t mask) {
  int count = 0;
  for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
    int v = __builtin_ctzll(bits);
    count += (nbr[v] & ~mask) != 0;
  }
  return count;
}

std::string describe_host(const HostTree& t) {
  std::ostringstream out;
  out << "host{";
  bool first = true;
  for (const auto& [a, b] : t.named_edges()) {
    out << (first ? "" : " ") << a << "-" << b;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string describe_set(const HostTree& t, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : t.labels_of(mask_to_set(t, mask))) {
    out += (first ? "" : ",") + n;
    first = false;
  }
  return out + "}";
}

// Per-host findings, merged in host order for a deterministic report.
struct HostFindings {
  bool examined = false;
  bool timed_out = false;
  std::uint64_t count = 0;
  std::map<std::string, std::uint64_t> violations;
  std::vector<std::string> counterexamples;
};

void merge(AuditReport& report, std::vector<HostFindings>& per_host, std::size_t max_reported, bool pairs) {
  for (auto& f : per_host) {
    report.hosts_examined += f.examined;
    report.timed_out = report.timed_out || f.timed_out || !f.examined;
    (pairs ? report.pairs_checked : report.representations_found) += f.count;
    for (const auto& [kind, n] : f.violations) report.violations[kind] += n;
    for (auto& c : f.counterexamples)
      if (report.counterexamples.size() < max_reported) report.counterexamples.push_back(std::move(c));
  }
}

}  // namespace

AuditReport audit_gadget_lemmas(int d, const SearchConfig& cfg, std::size_t max_reported) {
  if (d < 3) throw DomainError("gadget audit needs d >= 3");
  cfg.validate();
  Gadget gadget = build_gadget({d, 0, 3});
  const auto names = gadget.graph.vertices();
  const auto vs = std::find(names.begin(), names.end(), gadget.named.at("vs")) - names.begin();
  const auto vb = std::find(names.begin(), names.end(), gadget.named.at("vb")) - names.begin();

  Deadline deadline(cfg.time_budget);
  const auto hosts = enumerate_host_trees(cfg);
  AuditReport report;
  report.name = "gadget";
  report.hosts_total = hosts.size();
  report.violations = {{"containment", 0}, {"leaves", 0}};
  std::vector<HostFindings> findings(hosts.size());

  parallel_for(hosts.size(), cfg.jobs, [&](std::size_t i) {
    if (deadline.expired()) return;
    const HostTree& host = hosts[i];
    const auto nbr = neighbour_masks(host);
    HostFindings& f = findings[i];
    auto record = [&](const std::string& kind, const std::vector<std::uint64_t>& masks) {
      ++f.violations[kind];
      if (f.counterexamples.size() < max_reported)
        f.counterexamples.push_back(kind + ": " + describe_host(host) + " vs=" + describe_set(host, masks[vs]) +
                                    " vb=" + describe_set(host, masks[vb]));
    };
    VisitStatus s = visit_representations(
        gadget.graph, host, cfg,
        [&](const std::vector<std::uint64_t>& masks) {
          ++f.count;
          std::uint64_t ts = masks[vs], tb = masks[vb];
          bool s_in_b = (ts & ~tb) == 0 && ts != tb;
          bool b_in_s = (tb & ~ts) == 0 && ts != tb;
          if (s_in_b == b_in_s) record("containment", masks);
          if (leaves_in(nbr, ts) < d || leaves_in(nbr, tb) < d) record("leaves", masks);
          return true;
        },
        deadline);
    f.examined = s == VisitStatus::Complete;
    f.timed_out = s == VisitStatus::Timeout;
  });

  merge(report, findings, max_reported, false);
  report.seconds = deadline.elapsed();
  return report;
}

AuditReport audit_spanbranch(const SearchConfig& cfg, int boundary_excess, std::size_t max_reported) {
  cfg.validate();
  Deadline deadline(cfg.time_budget);
  const auto hosts = enumerate_host_trees(cfg);
  AuditReport report;
  report.name = "spanbranch";
  report.hosts_total = hosts.size();
  report.violations = {{"spanbranch", 0}};
  std::vector<HostFindings> findings(hosts.size());

  parallel_for(hosts.size(), cfg.jobs, [&](std::size_t i) {
    if (deadline.expired()) return;
    const HostTree& host = hosts[i];
    HostFindings& f = findings[i];
    TreeAnalysis a = analyze_tree(host);
    if (a.leafage < 3) {
      f.examined = true;
      return;
    }
    std::uint64_t branching = 0;
    for (int b : a.branching_nodes) branching |= std::uint64_t{1} << b;
    const auto nbr = neighbour_masks(host);
    const auto subsets = connected_subsets(host);
    std::vector<int> boundary(subsets.size());
    for (std::size_t j = 0; j < subsets.size(); ++j) boundary[j] = boundary_in(nbr, subsets[j]);
    const int target = a.leafage + boundary_excess;

    for (std::size_t x = 0; x < subsets.size(); ++x) {
      if (deadline.expired()) {
        f.timed_out = true;
        return;
      }
      for (std::size_t y = x + 1; y < subsets.size(); ++y) {
        if (subsets[x] & subsets[y] || boundary[x] + boundary[y] != target) continue;
        ++f.count;
        std::uint64_t missing = branching & ~(subsets[x] | subsets[y]);
        if (!missing) continue;
        ++f.violations["spanbranch"];
        if (f.counterexamples.size() < max_reported)
          f.counterexamples.push_back("spanbranch: " + describe_host(host) + " s=" + describe_set(host, subsets[x]) +
                                      " t=" + describe_set(host, subsets[y]) + " misses " +
                                      describe_set(host, missing));
      }
    }
    f.examined = true;
  });

  merge(report, findings, max_reported, true);
  report.seconds = deadline.elapsed();
  return report;
}

}  // namespace sog
