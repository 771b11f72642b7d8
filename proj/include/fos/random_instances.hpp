#pragma once

#include "fos/demand.hpp"
#include "fos/graph.hpp"
#include "fos/setfam.hpp"
#include "fos/solver.hpp"
#include "fos/uncross.hpp"

#include <random>
#include <utility>
#include <vector>

namespace fos {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// m edges with endpoints drawn uniformly (u ≠ v); parallel edges allowed
/// unless `simple` is set, in which case m is clipped to n(n-1)/2.
UGraph random_graph(Rng& rng, int n, int m, bool simple = false);

/// Random (k,ℓ) demand with the given parameters and a uniform root.
Demand random_kl(Rng& rng, int n, int k, int l);

/// Starts from the (k,ℓ) table (or zero when k = 0) and applies random ±1
/// changes on random sets, keeping each change only if the result is still
/// crossing G-supermodular.
Demand random_table_demand(Rng& rng, const UGraph& g, int k, int l, int perturbations);

enum class DemandKind { KL10, KL11, KL21, KL22, Table };

struct InstanceParams {
  int n = 6;
  int free_edges = 5;
  int purchasable = 8;
  DemandKind demand = DemandKind::KL11;
  int max_cost = 10;       ///< cost numerators in [0, max_cost]
  int max_cost_den = 3;    ///< cost denominators in [1, max_cost_den]
  int perturbations = 12;  ///< table demands only
};

Instance random_instance(Rng& rng, const InstanceParams& p);

/// Recursive random split of V∖{root}: every internal set is split into at
/// least two children. Sets are listed parent before child; children[i]
/// holds the indices of set i's children.
struct SplitTree {
  int n = 0;
  NodeId root = 0;
  std::vector<NodeSet> sets;
  std::vector<std::vector<std::size_t>> children;
};
SplitTree random_split_tree(Rng& rng, int n, NodeId root);

/// A random partition {V∖U} ∪ 𝒞 or co-partition {U} ∪ {V∖C : C ∈ 𝒞}, where
/// U is an internal set of the tree and 𝒞 a random antichain of descendants
/// that partitions U. Any two such families from one tree are cross-free.
PoCP random_family_from_tree(Rng& rng, const SplitTree& tree);

/// Union of `count` families from one tree: cross-free and regular.
SetFamily random_crossfree_regular(Rng& rng, int n, NodeId root, int count);

/// Draws pairs from random split trees until one is weakly cross-free.
std::pair<PoCP, PoCP> random_weakly_crossfree_pair(Rng& rng, int n, NodeId root);

}  // namespace fos
