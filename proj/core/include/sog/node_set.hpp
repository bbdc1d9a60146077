#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sog {

/// Fixed-universe bitset over host-tree node indices.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe);

  std::size_t universe() const { return universe_; }

  void insert(int i);
  void erase(int i);
  bool contains(int i) const;

  std::size_t count() const;
  bool empty() const;

  bool intersects(const NodeSet& other) const;
  bool is_subset_of(const NodeSet& other) const;

  NodeSet& operator|=(const NodeSet& other);
  NodeSet& operator&=(const NodeSet& other);
  /// Set difference.
  NodeSet& operator-=(const NodeSet& other);

  std::vector<int> elements() const;

  bool operator==(const NodeSet&) const = default;
  auto operator<=>(const NodeSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
inline NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
inline NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

}  // namespace sog
