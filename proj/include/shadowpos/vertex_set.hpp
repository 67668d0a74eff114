#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace shadowpos {

using Vertex = std::uint32_t;

// Upper bound on graph order; one machine word per adjacency row.
inline constexpr std::size_t kMaxVertices = 64;

// Subset of {0, .., universe-1} packed into a single 64-bit word.
class VertexSet {
 public:
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::size_t universe) : universe_(universe) {
    assert(universe <= kMaxVertices);
  }
  constexpr VertexSet(std::size_t universe, Word bits) : bits_(bits), universe_(universe) {
    assert(universe <= kMaxVertices);
    assert((bits & ~full_mask(universe)) == 0);
  }
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : universe_(universe) {
    for (Vertex v : members) insert(v);
  }

  static constexpr Word full_mask(std::size_t universe) {
    return universe >= 64 ? ~Word{0} : ((Word{1} << universe) - 1);
  }
  static constexpr VertexSet full(std::size_t universe) {
    return VertexSet(universe, full_mask(universe));
  }
  static constexpr Word bit(Vertex v) { return Word{1} << v; }

  constexpr std::size_t universe() const { return universe_; }
  constexpr Word bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return v < universe_ && ((bits_ >> v) & 1U) != 0; }

  void insert(Vertex v) {
    assert(v < universe_);
    bits_ |= bit(v);
  }
  void erase(Vertex v) { bits_ &= ~bit(v); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(universe_, bits_ | bit(v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(universe_, bits_ & ~bit(v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(universe_, bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(universe_, bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(universe_, bits_ & ~o.bits_); }
  constexpr VertexSet complement() const {
    return VertexSet(universe_, ~bits_ & full_mask(universe_));
  }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr bool operator==(const VertexSet&) const = default;

  // Ascending-index iteration over members.
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  Word bits_ = 0;
  std::size_t universe_ = 0;
};

}  // namespace shadowpos
