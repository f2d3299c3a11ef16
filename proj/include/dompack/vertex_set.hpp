#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace dompack {

using Vertex = int;

/// Fixed-capacity set of vertex indices backed by a 512-bit bitset.
///
/// Every graph in the library has at most kCapacity vertices, so all
/// neighborhood sets, dominating sets, packings and masks share this type.
class VertexSet {
 public:
  static constexpr int kCapacity = 512;
  static constexpr int kWords = kCapacity / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    Vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <typename Range>
  static VertexSet from(const Range& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  /// {0, 1, ..., n-1}
  static VertexSet range(int n) {
    check(n == 0 ? 0 : n - 1);
    if (n > kCapacity) throw std::out_of_range("VertexSet::range: n exceeds capacity");
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~bit(v);
  }
  bool contains(Vertex v) const {
    if (v < 0 || v >= kCapacity) return false;
    return (words_[v >> 6] & bit(v)) != 0;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const { return scan(0); }
  /// Smallest member greater than `after`, or -1.
  Vertex next(Vertex after) const { return after + 1 >= kCapacity ? -1 : scan(after + 1); }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_size(const VertexSet& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;
  /// Lexicographic on the raw words; only meaningful as a strict weak order for containers.
  bool operator<(const VertexSet& o) const {
    for (int i = kWords - 1; i >= 0; --i)
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }
  std::string to_string() const;

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
  static void check(Vertex v) {
    if (v < 0 || v >= kCapacity) throw std::out_of_range("vertex index out of VertexSet capacity");
  }
  Vertex scan(Vertex from) const {
    int w = from >> 6;
    if (w >= kWords) return -1;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w >= kWords) return -1;
      cur = words_[w];
    }
  }

  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace dompack
