#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#ifndef PENTA_MAX_VERTICES
#define PENTA_MAX_VERTICES 64
#endif

namespace penta {

/// Upper bound on the order of any graph handled by the library.
inline constexpr int kMaxVertices = PENTA_MAX_VERTICES;
static_assert(kMaxVertices == 64 || kMaxVertices == 128,
              "PENTA_MAX_VERTICES must be 64 or 128");

using Vertex = int;

/// Fixed-capacity set of vertex ids backed by one or two machine words.
/// Iteration is always in ascending vertex order.
class VertexSet {
  static constexpr int kWords = kMaxVertices / 64;
  using Words = std::array<std::uint64_t, kWords>;

 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const Words& words, int word) : words_(words), word_(word) { skip(); }

    Vertex operator*() const { return word_ * 64 + std::countr_zero(words_[word_]); }
    iterator& operator++() {
      words_[word_] &= words_[word_] - 1;
      skip();
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& other) const { return word_ == other.word_ && words_ == other.words_; }

   private:
    void skip() {
      while (word_ < kWords && words_[word_] == 0) ++word_;
    }
    Words words_{};
    int word_ = kWords;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <class Range>
  static VertexSet of(const Range& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  /// {0, 1, ..., n-1}
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return s;
  }

  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Orders by smallest differing member, so sorting a list of sets is deterministic.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    for (int w = 0; w < kWords; ++w) {
      if (a.words_[w] == b.words_[w]) continue;
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      return (a.words_[w] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  iterator begin() const { return iterator(words_, 0); }
  iterator end() const { return iterator(); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  Words words_{};
};

}  // namespace penta
