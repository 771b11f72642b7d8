#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fos {

using NodeId = int;

/// Hard upper bound on node count for bitmask-backed node sets.
inline constexpr int kMaxNodes = 32;

/// A subset of V = {0, ..., n-1} stored as a membership bitmask.
/// The ground-set size is not stored; operations that need it take `n`.
class NodeSet {
 public:
  constexpr NodeSet() = default;

  static constexpr NodeSet from_bits(std::uint32_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr NodeSet full(int n) {
    return from_bits(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr NodeSet singleton(NodeId v) { return from_bits(std::uint32_t{1} << v); }
  static NodeSet of(std::initializer_list<NodeId> nodes) {
    NodeSet s;
    for (NodeId v : nodes) s.insert(v);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(NodeId v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr NodeSet& insert(NodeId v) {
    bits_ |= std::uint32_t{1} << v;
    return *this;
  }
  constexpr NodeSet& erase(NodeId v) {
    bits_ &= ~(std::uint32_t{1} << v);
    return *this;
  }

  constexpr NodeSet complement(int n) const { return from_bits(full(n).bits_ & ~bits_); }
  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(NodeSet a, NodeSet b) = default;
  friend constexpr auto operator<=>(NodeSet a, NodeSet b) = default;

  std::vector<NodeId> members() const;
  /// "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// S and T cross when S∩T, S∖T, T∖S and V∖(S∪T) are all nonempty.
constexpr bool crossing(NodeSet s, NodeSet t, int n) {
  return (s & t).bits() != 0 && (s - t).bits() != 0 && (t - s).bits() != 0 &&
         (s | t) != NodeSet::full(n);
}

/// S and T are laminar-compatible: disjoint or nested.
constexpr bool laminar_pair(NodeSet s, NodeSet t) {
  return !s.intersects(t) || s.subset_of(t) || t.subset_of(s);
}

}  // namespace fos
