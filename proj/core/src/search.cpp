#include "sog/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "sog/errors.hpp"
#include "sog/log.hpp"
#include "sog/subdivision.hpp"
#include "sog/tree_analysis.hpp"
#include "sog/tree_enumeration.hpp"

namespace sog {

void SearchConfig::validate() const {
  if (constraint == HostConstraint::Fixed) {
    if (!base) throw DomainError("a fixed host constraint needs the host");
  } else {
    if (max_host_nodes < 2) throw DomainError("host node cap must be at least 2");
    if (min_host_nodes < 1 || min_host_nodes > max_host_nodes)
      throw DomainError("host node range is empty");
  }
  if (max_host_nodes > 63) throw DomainError("hosts are limited to 63 nodes");
  if ((constraint == HostConstraint::MaxLeafage || constraint == HostConstraint::MaxDegree) && bound < 1)
    throw DomainError("leafage or degree bound must be positive");
  if (constraint == HostConstraint::SubdivisionOf && !base) throw DomainError("subdivision constraint needs a base tree");
  if (jobs < 1) throw DomainError("jobs must be positive");
  if (time_budget < 0) throw DomainError("time budget must be non-negative");
}

namespace {

std::vector<HostTree> subdivisions_within(const HostTree& base, int min_nodes, int max_nodes) {
  const auto edges = base.named_edges();
  const int spare = max_nodes - base.size();
  std::map<std::pair<int, std::string>, HostTree> found;
  if (spare < 0) return {};
  std::vector<int> extra(edges.size(), 0);
  // Enumerate every distribution of at most `spare` new nodes over the edges.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == edges.size()) {
      std::vector<SubdivisionRequest> requests;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (extra[e] > 0) requests.push_back({edges[e].first, edges[e].second, extra[e]});
      HostTree t = subdivide_edges(base, requests).tree;
      if (t.size() >= min_nodes) found.try_emplace({t.size(), canonical_form(t)}, std::move(t));
      return;
    }
    for (int x = 0; x <= left; ++x) {
      extra[i] = x;
      rec(i + 1, left - x);
    }
    extra[i] = 0;
  };
  rec(0, spare);
  std::vector<HostTree> out;
  for (auto& [key, t] : found) out.push_back(std::move(t));
  return out;
}

}  // namespace

std::vector<HostTree> enumerate_host_trees(const SearchConfig& cfg) {
  cfg.validate();
  if (cfg.constraint == HostConstraint::Fixed) return {*cfg.base};
  if (cfg.constraint == HostConstraint::SubdivisionOf)
    return subdivisions_within(*cfg.base, cfg.min_host_nodes, cfg.max_host_nodes);
  std::vector<HostTree> out;
  for (int n = cfg.min_host_nodes; n <= cfg.max_host_nodes; ++n) {
    for (auto& t : free_trees(n)) {
      if (cfg.constraint != HostConstraint::None) {
        TreeAnalysis a = analyze_tree(t);
        int measure = cfg.constraint == HostConstraint::MaxLeafage ? a.leafage : a.max_degree;
        if (measure > cfg.bound) continue;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

Deadline::Deadline(double seconds) : start_(std::chrono::steady_clock::now()) {
  if (seconds > 0)
    end_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

bool Deadline::expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }

double Deadline::elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::BoundedAbsent: return "bounded_absent";
    case SearchStatus::Timeout: return "timeout";
  }
  return "?";
}

namespace {

bool is_path_mask(const HostTree& t, std::uint64_t mask) {
  for (int v = 0; v < t.size(); ++v) {
    if (!(mask >> v & 1)) continue;
    int inside = 0;
    for (int w : t.neighbors(v)) inside += mask >> w & 1;
    if (inside > 2) return false;
  }
  return true;
}

bool related(std::uint64_t a, std::uint64_t b, RelationMode mode) {
  std::uint64_t common = a & b;
  if (!common) return false;
  if (mode == RelationMode::Intersection) return true;
  return (a & ~b) && (b & ~a);
}

class HostSearch {
 public:
  HostSearch(const Graph& g, const HostTree& host, const SearchConfig& cfg) : g_(g) {
    for (auto m : connected_subsets(host))
      if (cfg.shape == SubtreeShape::Any || is_path_mask(host, m)) masks_.push_back(m);
    const std::size_t c = masks_.size();
    words_ = (c + 63) / 64;
    related_.assign(c * words_, 0);
    unrelated_.assign(c * words_, 0);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        auto& row = related(masks_[i], masks_[j], cfg.relation) ? related_ : unrelated_;
        row[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }

    const int n = g_.size();
    for (int v = 0; v < n; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g_.adjacency[a].size() > g_.adjacency[b].size();
    });

    first_domain_.assign(words_, 0);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < c; ++i) {
      bool keep = !cfg.symmetry_breaking || seen.insert(canonical_form(host, mask_to_set(host, masks_[i]))).second;
      if (keep) first_domain_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  VisitStatus run(const MaskVisitor& visit, const Deadline& deadline, const std::function<bool()>& cancel,
                  std::uint64_t& steps) {
    const int n = g_.size();
    assignment_.assign(n, 0);
    if (n == 0) return visit(assignment_) ? VisitStatus::Complete : VisitStatus::Stopped;
    domains_.assign(static_cast<std::size_t>(n + 1) * n * words_, 0);
    for (int v = 0; v < n; ++v) {
      std::uint64_t* d = domain(0, v);
      for (std::size_t w = 0; w < words_; ++w) d[w] = ~std::uint64_t{0};
      if (masks_.size() % 64) d[words_ - 1] = (std::uint64_t{1} << (masks_.size() % 64)) - 1;
    }
    std::copy(first_domain_.begin(), first_domain_.end(), domain(0, order_[0]));
    visit_ = &visit;
    deadline_ = &deadline;
    cancel_ = &cancel;
    steps_ = &steps;
    return descend(0);
  }

 private:
  std::uint64_t* domain(int depth, int v) {
    return domains_.data() + (static_cast<std::size_t>(depth) * g_.size() + v) * words_;
  }

  VisitStatus descend(int depth) {
    const int n = g_.size();
    if (depth == n) return (*visit_)(assignment_) ? VisitStatus::Complete : VisitStatus::Stopped;
    const int v = order_[depth];
    const std::uint64_t* dv = domain(depth, v);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = dv[w]; bits; bits &= bits - 1) {
        std::size_t c = w * 64 + __builtin_ctzll(bits);
        if ((++*steps_ & 1023) == 0) {
          if (deadline_->expired()) return VisitStatus::Timeout;
          if (*cancel_ && (*cancel_)()) return VisitStatus::Stopped;
        }
        bool alive = true;
        for (int i = depth + 1; i < n && alive; ++i) {
          int u = order_[i];
          const std::uint64_t* row = (g_.matrix[v][u] ? related_ : unrelated_).data() + c * words_;
          const std::uint64_t* from = domain(depth, u);
          std::uint64_t* to = domain(depth + 1, u);
          std::uint64_t any = 0;
          for (std::size_t x = 0; x < words_; ++x) any |= (to[x] = from[x] & row[x]);
          alive = any != 0;
        }
        if (!alive) continue;
        assignment_[v] = masks_[c];
        VisitStatus s = descend(depth + 1);
        if (s != VisitStatus::Complete) return s;
      }
    }
    return VisitStatus::Complete;
  }

  IndexedGraph g_;
  std::vector<std::uint64_t> masks_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> related_, unrelated_;
  std::vector<int> order_;
  std::vector<std::uint64_t> first_domain_;

  std::vector<std::uint64_t> domains_;
  std::vector<std::uint64_t> assignment_;
  const MaskVisitor* visit_ = nullptr;
  const Deadline* deadline_ = nullptr;
  const std::function<bool()>* cancel_ = nullptr;
  std::uint64_t* steps_ = nullptr;
};

}  // namespace

VisitStatus visit_representations(const Graph& g, const HostTree& host, const SearchConfig& cfg,
                                  const MaskVisitor& visit, const Deadline& deadline,
                                  const std::function<bool()>& cancel, std::uint64_t* steps) {
  std::uint64_t local = 0;
  HostSearch search(g, host, cfg);
  return search.run(visit, deadline, cancel, steps ? *steps : local);
}

Representation representation_from_masks(const Graph& g, std::shared_ptr<const HostTree> host,
                                         const std::vector<std::uint64_t>& masks) {
  const auto names = g.vertices();
  if (masks.size() != names.size()) throw DomainError("one mask per vertex expected");
  std::map<VertexId, Subtree> assignment;
  for (std::size_t i = 0; i < names.size(); ++i) assignment.emplace(names[i], Subtree(host, mask_to_set(*host, masks[i])));
  return Representation(std::move(host), std::move(assignment));
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) work(i);
  };
  int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

SearchResult find_representation(const Graph& g, const SearchConfig& cfg) {
  cfg.validate();
  if (g.vertex_count() > 12)
    log::warn("exhaustive search on " + std::to_string(g.vertex_count()) + " vertices may not finish");
  Deadline deadline(cfg.time_budget);
  const auto hosts = enumerate_host_trees(cfg);

  SearchResult result;
  result.stats.hosts_total = hosts.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  std::vector<std::optional<std::vector<std::uint64_t>>> witness(hosts.size());
  std::vector<char> complete(hosts.size(), 0);
  std::atomic<std::uint64_t> steps{0};
  std::atomic<std::size_t> examined{0};

  parallel_for(hosts.size(), cfg.jobs, [&](std::size_t i) {
    if (i > best.load() || deadline.expired()) return;
    std::uint64_t local = 0;
    std::function<bool()> cancel = [&] { return best.load() < i; };
    VisitStatus s = visit_representations(
        g, hosts[i], cfg,
        [&](const std::vector<std::uint64_t>& masks) {
          witness[i] = masks;
          return false;
        },
        deadline, cancel, &local);
    steps += local;
    ++examined;
    if (witness[i]) {
      std::size_t current = best.load();
      while (i < current && !best.compare_exchange_weak(current, i)) {
      }
    }
    complete[i] = s != VisitStatus::Timeout && !(s == VisitStatus::Stopped && !witness[i]);
  });

  result.stats.steps = steps;
  result.stats.hosts_examined = examined;
  result.stats.seconds = deadline.elapsed();
  std::size_t b = best.load();
  bool prefix_complete = true;
  for (std::size_t i = 0; i < std::min(b, hosts.size()); ++i) prefix_complete = prefix_complete && complete[i];
  if (b != none && prefix_complete) {
    auto host = std::make_shared<const HostTree>(hosts[b]);
    Representation rep = representation_from_masks(g, host, *witness[b]);
    if (!verify_representation(rep, g, cfg.relation).pass)
      throw InternalError("search produced a representation that fails verification");
    result.status = SearchStatus::Found;
    result.representation = std::move(rep);
  } else if (prefix_complete) {
    result.status = SearchStatus::BoundedAbsent;
  } else {
    result.status = SearchStatus::Timeout;
  }
  return result;
}

}  // namespace sog
