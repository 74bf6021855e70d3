#pragma once

// Packed bitset over the vertex universe {0..n-1} of one graph.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace p5hom {

using Vertex = std::uint32_t;

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();

class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& o) const { return at_ == o.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = no_vertex;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U);
  }

  void insert(Vertex v) {
    check(v);
    words_[v / word_bits] |= Word{1} << (v % word_bits);
  }

  void erase(Vertex v) {
    check(v);
    words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t size() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  // Smallest member >= from, or no_vertex.
  Vertex next(Vertex from) const {
    if (from >= universe_) return no_vertex;
    std::size_t wi = from / word_bits;
    Word w = words_[wi] & (~Word{0} << (from % word_bits));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * word_bits + std::countr_zero(w));
      if (++wi == words_.size()) return no_vertex;
      w = words_[wi];
    }
  }

  Vertex first() const { return next(0); }

  Vertex last() const {
    for (std::size_t wi = words_.size(); wi-- > 0;) {
      if (words_[wi] != 0)
        return static_cast<Vertex>(wi * word_bits + word_bits - 1 - std::countl_zero(words_[wi]));
    }
    return no_vertex;
  }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, no_vertex}; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  // Symmetric difference.
  VertexSet& operator^=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Complement in place.
  VertexSet& flip() {
    for (Word& w : words_) w = ~w;
    trim();
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::size_t intersection_size(const VertexSet& o) const {
    same_universe(o);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return total;
  }

  // |this \ o|
  std::size_t difference_size(const VertexSet& o) const {
    same_universe(o);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
    return total;
  }

  // Smallest member of this ∩ o, or no_vertex.
  Vertex first_common(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i] & o.words_[i];
      if (w) return static_cast<Vertex>(i * word_bits + std::countr_zero(w));
    }
    return no_vertex;
  }

  // Smallest member of this \ o, or no_vertex.
  Vertex first_outside(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i] & ~o.words_[i];
      if (w) return static_cast<Vertex>(i * word_bits + std::countr_zero(w));
    }
    return no_vertex;
  }

  bool operator==(const VertexSet& o) const = default;

  // Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    Vertex x = a.first(), y = b.first();
    while (x != no_vertex && y != no_vertex) {
      if (x != y) return x < y;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    return x == no_vertex && y != no_vertex;
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_) throw std::out_of_range("vertex outside the set universe");
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % word_bits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace p5hom
