#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fo2 {

/// Fixed-universe dynamic bitset. Holds element subsets of a monoid,
/// subword-class member sets and visited-pair sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe)
      : universe_(universe), blocks_((universe + 63) / 64, 0) {}

  static Bitset full(int universe) {
    Bitset b(universe);
    for (int i = 0; i < universe; ++i) b.set(i);
    return b;
  }

  int universe() const { return universe_; }

  void set(int i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (blocks_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int total = 0;
    for (auto block : blocks_) total += __builtin_popcountll(block);
    return total;
  }
  bool empty() const {
    for (auto block : blocks_)
      if (block != 0) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
    return *this;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < universe_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  /// Lexicographic on (universe, blocks); makes Bitset usable as a map key.
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
    if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i)
      if (a.blocks_[i] != b.blocks_[i]) return a.blocks_[i] <=> b.blocks_[i];
    return std::strong_ordering::equal;
  }

  const std::vector<std::uint64_t>& blocks() const { return blocks_; }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace fo2
