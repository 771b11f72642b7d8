#pragma once

#include "fos/lp2.hpp"
#include "fos/setfam.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fos {

/// Multiset of nonempty proper subsets of V.
using SetFamily = std::vector<NodeSet>;

/// Ψ_x(𝓕) = Σ_{S∈𝓕} ½x(δ(S)) − f(S) + ½d_base(S), with x over the variable edges.
Rat psi(const Lp2System& sys, std::span<const Rat> x, std::span<const NodeSet> fam);

/// t when every node lies in exactly t members.
std::optional<int> is_regular(std::span<const NodeSet> fam, int n);
bool is_cross_free(std::span<const NodeSet> fam, int n);

/// Splits a cross-free t-regular family into partitions and co-partitions
/// whose multiset union is exactly `fam`. Throws ContractViolation when the
/// family is not cross-free or not regular.
std::vector<PoCP> decompose_regular_crossfree(std::span<const NodeSet> fam, int n, NodeId root);

/// Replaces crossing pairs A, B by A∩B, A∪B until no pair crosses.
SetFamily uncross_pair_sets(SetFamily fam, int n);

/// Multiset of the parts of all given families.
SetFamily union_of(std::span<const PoCP> fams);

struct UpsilonResult {
  std::vector<PoCP> members;
  /// Index of the special member (mixed-kind inputs only).
  std::optional<std::size_t> special;
};

/// Uncrossing of a weakly cross-free pair: {𝒫∧𝒬, 𝒫∨𝒬} for equal kinds, one
/// member per maximal set of 𝒫 ∪ 𝒬̄ for a partition and a co-partition.
/// Throws ContractViolation unless p and q are weakly cross-free.
UpsilonResult upsilon(const PoCP& p, const PoCP& q);

/// Σ over the members of their χ as 0/1 vectors over the variable edges.
std::vector<Rat> chi_sum(const Lp2System& sys, std::span<const PoCP> fams);

enum class BasisStrategy {
  /// Greedy maximal strongly cross-free independent set of tight rows.
  Greedy,
  /// Grow the family one member at a time, each obtained by the (ν, μ)
  /// descent: uncross-and-decompose while ν > 0, Υ while μ > 0.
  Descent,
};

struct BasisStats {
  int tight_rows = 0;
  int descent_steps = 0;
  int uncross_steps = 0;
  int upsilon_steps = 0;
};

struct BasisFamily {
  /// Residual system: x = 1 edges moved into the base, only strictly
  /// fractional edges left as variables.
  Lp2System residual;
  std::vector<Rat> x;                    ///< values on residual variables
  std::vector<std::size_t> var_origin;   ///< residual variable -> index in the input system
  std::vector<PoCP> members;
  BasisStats stats;
};

/// Builds a strongly cross-free family of tight rows whose χ vectors are
/// linearly independent and span every tight row, over the strictly
/// fractional coordinates of the vertex x. Throws ContractViolation when x is
/// not a vertex (the tight rows do not reach full rank).
BasisFamily extract_strongly_crossfree_basis(const Lp2System& sys, std::span<const Rat> x,
                                             BasisStrategy strategy = BasisStrategy::Greedy);

struct BasisCheck {
  bool tight = false;
  bool strongly_cross_free = false;
  bool independent = false;
  bool full_dimension = false;
  bool ok() const { return tight && strongly_cross_free && independent && full_dimension; }
};

/// Independent re-verification of a returned family.
BasisCheck check_basis(const BasisFamily& b);

/// 𝒫 ⪯ 𝒬: tilde(𝒬) dominates tilde(𝒫).
bool precedes(const PoCP& p, const PoCP& q);

/// parent[i] is the ⪯-smallest member strictly above member i, or nothing.
struct DominationForest {
  std::vector<std::optional<std::size_t>> parent;
  bool is_ancestor(std::size_t anc, std::size_t node) const;
};

/// Throws ContractViolation when the family is not strongly cross-free or the
/// dominators of some member do not form a chain.
DominationForest domination_forest(std::span<const PoCP> fam);

}  // namespace fos
