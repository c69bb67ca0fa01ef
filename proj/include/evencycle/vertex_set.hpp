#pragma once

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <vector>

namespace evencycle {

/// Set of vertex ids over a fixed universe {0..n-1}, stored as a bitset.
/// Doubles as an adjacency row, so intersections and popcounts are cheap.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("negative universe");
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void insert(int v) {
    check(v);
    words_[v >> 6] |= (uint64_t{1} << (v & 63));
  }

  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int size() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int intersection_size(const VertexSet& other) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  bool intersects(const VertexSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  VertexSet& operator|=(const VertexSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  /// Smallest member > v, or -1.
  int next(int v) const {
    ++v;
    if (v >= n_) return -1;
    size_t i = size_t(v) >> 6;
    uint64_t w = words_[i] & (~uint64_t{0} << (v & 63));
    while (true) {
      if (w) return int(i * 64 + std::countr_zero(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  template <typename F>
  void for_each(F&& fn) const {
    for (int v = first(); v >= 0; v = next(v)) fn(v);
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace evencycle
