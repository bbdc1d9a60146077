#include "sog/node_set.hpp"

#include <bit>
#include <cassert>

namespace sog {

NodeSet::NodeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

void NodeSet::insert(int i) {
  assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void NodeSet::erase(int i) {
  assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool NodeSet::contains(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= universe_) return false;
  return (words_[i / 64] >> (i % 64)) & 1U;
}

std::size_t NodeSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool NodeSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool NodeSet::intersects(const NodeSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<int> NodeSet::elements() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace sog
