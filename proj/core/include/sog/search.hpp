#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sog/graph.hpp"
#include "sog/host_tree.hpp"
#include "sog/representation.hpp"

namespace sog {

enum class HostConstraint { None, MaxLeafage, MaxDegree, SubdivisionOf, Fixed };
enum class SubtreeShape { Any, PathsOnly };

struct SearchConfig {
  int min_host_nodes = 2;
  int max_host_nodes = 8;
  HostConstraint constraint = HostConstraint::None;
  /// Leafage or degree bound for MaxLeafage / MaxDegree.
  int bound = 0;
  /// Base tree for SubdivisionOf, the host itself for Fixed.
  std::optional<HostTree> base;
  RelationMode relation = RelationMode::Overlap;
  SubtreeShape shape = SubtreeShape::Any;
  /// Wall-clock seconds; 0 means unlimited.
  double time_budget = 0;
  int jobs = 1;
  /// Restrict the first vertex to one subtree per host automorphism orbit.
  bool symmetry_breaking = true;

  /// Throws DomainError on inconsistent settings.
  void validate() const;
};

/// One host per isomorphism class satisfying the constraint, ordered by
/// node count and then canonical form. SubdivisionOf keeps the base labels
/// and names new nodes as `subdivide` does.
std::vector<HostTree> enumerate_host_trees(const SearchConfig& cfg);

class Deadline {
 public:
  /// `seconds` <= 0 never expires.
  explicit Deadline(double seconds = 0);
  bool expired() const;
  double elapsed() const;

 private:
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::steady_clock::time_point> end_;
};

enum class SearchStatus { Found, BoundedAbsent, Timeout };
std::string to_string(SearchStatus s);

struct SearchStats {
  std::size_t hosts_total = 0;
  std::size_t hosts_examined = 0;
  std::uint64_t steps = 0;
  double seconds = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::BoundedAbsent;
  std::optional<Representation> representation;
  SearchStats stats;
};

/// First representation of `g` over the configured hosts, in host order.
/// BoundedAbsent means the whole bounded space was exhausted; Timeout means
/// it was not. Returned representations have been re-verified.
SearchResult find_representation(const Graph& g, const SearchConfig& cfg);

enum class VisitStatus { Complete, Stopped, Timeout };

/// Subtree masks per vertex, indexed like IndexedGraph(g).names.
using MaskVisitor = std::function<bool(const std::vector<std::uint64_t>&)>;

/// Calls `visit` for every representation of `g` on `host` (up to the
/// first-vertex symmetry quotient when enabled) until it returns false.
/// `cancel`, when set, is polled together with the deadline.
VisitStatus visit_representations(const Graph& g, const HostTree& host, const SearchConfig& cfg,
                                  const MaskVisitor& visit, const Deadline& deadline,
                                  const std::function<bool()>& cancel = {}, std::uint64_t* steps = nullptr);

Representation representation_from_masks(const Graph& g, std::shared_ptr<const HostTree> host,
                                         const std::vector<std::uint64_t>& masks);

/// Runs `work(i)` for i in [0, count) on up to `jobs` threads, handing out
/// indices in increasing order.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work);

}  // namespace sog
