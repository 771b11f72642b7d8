#pragma once

#include "fos/graph.hpp"
#include "fos/node_set.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fos {

enum class FamilyKind { Partition, CoPartition };

/// A partition or co-partition of V = [0, n) carrying its root node.
///
/// Root convention: for a partition the first stored part contains the root;
/// for a co-partition the first stored part is the unique part missing the
/// root. Remaining parts are kept in ascending bitmask order, so two values
/// describing the same family compare equal.
///
/// A two-part co-partition {A, B} is the same set family as the partition
/// {B, A}; the factories normalize it to partition kind.
class PoCP {
 public:
  static PoCP partition(int n, NodeId root, std::vector<NodeSet> parts);
  static PoCP copartition(int n, NodeId root, std::vector<NodeSet> parts);
  /// Detects the kind from the covering multiplicity; throws if neither.
  static PoCP from_sets(int n, NodeId root, std::vector<NodeSet> parts);

  FamilyKind kind() const { return kind_; }
  bool is_partition() const { return kind_ == FamilyKind::Partition; }
  int node_count() const { return n_; }
  NodeId root() const { return root_; }
  const std::vector<NodeSet>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  NodeSet first() const { return parts_.front(); }

  /// The co-partition of complements (for a partition with ≥ 3 parts) or the
  /// partition of complements (for a co-partition).
  PoCP complemented() const;

  /// Per node: index of the part containing it (partition) or missing it
  /// (co-partition). An edge is in χ exactly when its endpoint labels differ.
  std::vector<int> labels() const;

  /// "P{0,1}|{2}|{3}" or "C{2,3}|{0,1,2}|{0,1,3}".
  std::string encode() const;

  friend bool operator==(const PoCP& a, const PoCP& b) { return a.kind_ == b.kind_ && a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const PoCP& a, const PoCP& b);

 private:
  PoCP(FamilyKind kind, int n, NodeId root, std::vector<NodeSet> parts)
      : kind_(kind), n_(n), root_(root), parts_(std::move(parts)) {}

  FamilyKind kind_ = FamilyKind::Partition;
  int n_ = 0;
  NodeId root_ = 0;
  std::vector<NodeSet> parts_;
};

/// Pairwise disjoint nonempty sets.
struct SubPartition {
  std::vector<NodeSet> parts;
  NodeSet support() const;
};

/// χ(𝒫): indices of edges (u,v) with u ∈ S∖T, v ∈ T∖S for distinct parts S,T.
std::vector<std::size_t> chi(const PoCP& p, const UGraph& g);
/// e_G(𝒫) = |χ_G(𝒫)|, counting parallel edges.
int e_count(const PoCP& p, const UGraph& g);

/// The associated subpartition: non-root parts of a partition, or complements
/// of the non-first parts of a co-partition.
SubPartition tilde(const PoCP& p);

enum class Domination { None, Dominates, StronglyDominates };

/// Whether `q` dominates `p` (every part of p inside some part of q), and
/// strongly so (supp(p) inside a single part of q).
Domination dominates(const SubPartition& q, const SubPartition& p);
bool disjoint(const SubPartition& a, const SubPartition& b);

/// 𝒫 ∪ 𝒬 has no crossing pair.
bool cross_free(const PoCP& p, const PoCP& q);
bool strongly_cross_free(const PoCP& p, const PoCP& q);
/// Cross-free but not strongly cross-free.
bool weakly_cross_free(const PoCP& p, const PoCP& q);
/// Mixed-kind characterization: some co-partition part lies inside some
/// partition part. Requires one argument of each kind.
bool mixed_strongly_cross_free(const PoCP& partition, const PoCP& copartition);

/// ν(𝓕, 𝓗): number of crossing pairs (X, Y) with X ∈ 𝓕, Y ∈ 𝓗, with multiplicity.
int crossing_pairs(std::span<const NodeSet> f, std::span<const NodeSet> h, int n);

/// Default desk-scale cap on n for exhaustive (co-)partition enumeration.
inline constexpr int kEnumerationCap = 12;

/// A set partition produced by the enumerator, parts in restricted-growth
/// order (part 0 holds node 0). Views are valid only inside the callback.
struct PartitionView {
  std::span<const int> labels;     ///< part index of each node
  std::span<const NodeSet> parts;  ///< parts indexed by label
};

/// Visits every set partition of [0, n) with between min_parts and max_parts
/// parts exactly once, in restricted-growth-string order. The callback
/// returns false to stop early. Throws CapExceeded when n > cap.
void for_each_set_partition(int n, int min_parts, int max_parts, const std::function<bool(const PartitionView&)>& fn,
                            int cap = kEnumerationCap);

/// Every partition of [0, n) with at least 2 and at most max_parts parts,
/// root part stored first.
std::vector<PoCP> enum_partitions(int n, int max_parts, NodeId root = 0, int cap = kEnumerationCap);

/// Every co-partition with at least 3 parts (complements of partitions).
std::vector<PoCP> enum_copartitions(int n, int max_parts, NodeId root = 0, int cap = kEnumerationCap);

/// Bell(n) − 1, the number of partitions with at least two parts.
long long partition_count(int n);

}  // namespace fos
