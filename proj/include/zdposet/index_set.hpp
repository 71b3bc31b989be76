#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace zdp {

/// Upper bound on the element count of a poset and the vertex count of a
/// graph. Every set in the library is one machine word.
inline constexpr std::size_t kMaxIndex = 64;

/// A subset of {0, ..., 63} stored as a bitmask. The tag keeps element sets
/// and vertex sets from being mixed up.
template <class Tag>
class IndexSet {
public:
  using Word = std::uint64_t;

  class iterator {
  public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(Word rest) : rest_(rest) {}

    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator &operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator &) const = default;

  private:
    Word rest_ = 0;
  };

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(Word bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices)
      insert(i);
  }

  /// {0, ..., n-1}.
  static constexpr IndexSet first(std::size_t n) {
    return IndexSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
  }
  static constexpr IndexSet single(std::size_t i) { return IndexSet(Word{1} << i); }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr void insert(std::size_t i) { bits_ |= Word{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(Word{1} << i); }

  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(IndexSet other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr IndexSet &operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }
  constexpr IndexSet &operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  constexpr IndexSet &operator-=(IndexSet o) { bits_ &= ~o.bits_; return *this; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  constexpr auto operator<=>(const IndexSet &) const = default;

private:
  Word bits_ = 0;
};

using ElementId = std::size_t;
using VertexId = std::size_t;

using ElementSet = IndexSet<struct element_index_tag>;
using VertexSet = IndexSet<struct vertex_index_tag>;

} // namespace zdp
