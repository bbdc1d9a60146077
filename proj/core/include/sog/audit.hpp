#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sog/search.hpp"

namespace sog {

struct AuditReport {
  std::string name;
  bool timed_out = false;
  std::size_t hosts_total = 0;
  std::size_t hosts_examined = 0;
  /// Representations (gadget audit) or subtree pairs (spanbranch audit) checked.
  std::uint64_t representations_found = 0;
  std::uint64_t pairs_checked = 0;
  std::map<std::string, std::uint64_t> violations;
  /// The first few counterexamples, verbatim.
  std::vector<std::string> counterexamples;
  double seconds = 0;

  std::uint64_t violation_count() const;
  std::uint64_t violation_count(const std::string& kind) const;
};

/// Enumerates every representation of the gadget with parameters (d, 0) on
/// the configured hosts and checks that v_s and v_b are strictly nested one
/// way or the other ("containment") and that both subtrees have at least d
/// leaves ("leaves").
AuditReport audit_gadget_lemmas(int d, const SearchConfig& cfg, std::size_t max_reported = 20);

/// For every host with k >= 3 leaves and every pair of disjoint subtrees
/// whose boundary-node counts sum to k + `boundary_excess`, checks that every
/// branching node lies in one of the two ("spanbranch"). The claim holds for
/// an excess of 2; an excess of 1 serves as a negative control.
AuditReport audit_spanbranch(const SearchConfig& cfg, int boundary_excess = 2, std::size_t max_reported = 20);

}  // namespace sog
