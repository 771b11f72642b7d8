#pragma once

#include "fos/graph.hpp"
#include "fos/node_set.hpp"
#include "fos/setfam.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fos {

struct KLParams {
  int k = 0;
  int l = 0;
  NodeId r0 = 0;
};

/// Demand f: 2^V → Z≥0 with f(∅) = f(V) = 0.
///
/// Either the rooted (k,ℓ)-connectivity form (k on nonempty sets missing r0,
/// ℓ on proper sets containing r0) or an explicit table with default 0.
class Demand {
 public:
  Demand() = default;

  /// Requires k ≥ ℓ ≥ 0.
  static Demand kl(int n, int k, int l, NodeId r0);
  /// Entries on ∅ or V must be 0; values must lie in [0, n(n-1)].
  static Demand table(int n, const std::vector<std::pair<NodeSet, int>>& entries);

  int node_count() const { return n_; }
  bool is_kl() const { return is_kl_; }
  const KLParams& kl_params() const { return kl_; }

  int eval(NodeSet s) const {
    if (is_kl_) {
      if (s.empty() || s == NodeSet::full(n_)) return 0;
      return s.contains(kl_.r0) ? kl_.l : kl_.k;
    }
    return table_[s.bits()];
  }

  /// Nonzero table entries in ascending bitmask order (empty for KL).
  std::vector<std::pair<NodeSet, int>> entries() const;

  /// Largest value the demand takes.
  int max_value() const;

  friend bool operator==(const Demand& a, const Demand& b);

 private:
  int n_ = 0;
  bool is_kl_ = false;
  KLParams kl_;
  std::vector<int> table_;  // dense over 2^n, zero default
};

/// Largest admissible table value on n nodes.
inline int table_value_cap(int n) { return n * (n - 1); }

/// Desk-scale cap for the exhaustive supermodularity check.
inline constexpr int kSupermodularityCap = 12;

/// Returns a crossing pair (S,T) with f(S)+f(T) > f(S∩T)+f(S∪T)+d_G(S,T), or
/// nothing when f is crossing G-supermodular.
std::optional<std::pair<NodeSet, NodeSet>> check_crossing_gsupermodular(const Demand& f, const UGraph& g);

/// Σ f(S) over the parts of p (the parts themselves, also for co-partitions).
int partition_demand(const Demand& f, const PoCP& p);

}  // namespace fos
