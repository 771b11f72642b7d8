#pragma once

#include "fos/demand.hpp"
#include "fos/graph.hpp"
#include "fos/setfam.hpp"

#include <optional>
#include <vector>

namespace fos {

struct OrientabilityVerdict {
  bool orientable = false;
  /// A partition or co-partition with e_G(𝒫) < Σ f(S) when not orientable.
  std::optional<PoCP> witness;
};

struct OrientabilityOptions {
  NodeId root = 0;
  /// Check partitions only (sufficient for (k,ℓ) demands with k ≥ ℓ).
  bool partitions_only = false;
  int cap = kEnumerationCap;
};

/// Decides f-orientability through the partition/co-partition condition.
/// Requires f crossing G-supermodular with f(∅) = f(V) = 0.
OrientabilityVerdict is_f_orientable(const UGraph& g, const Demand& f, const OrientabilityOptions& opts = {});

/// One arc per edge of the graph, in edge order.
using Orientation = std::vector<Arc>;

/// Integral covering orientation read off a vertex of the cut system
/// {y_uv + y_vu = 1, 0 ≤ y ≤ 1, y(δ^in(S)) ≥ f(S)} solved by row generation.
/// Throws InputError when g is not f-orientable and ContractViolation when
/// the vertex comes out fractional.
Orientation extract_orientation(const UGraph& g, const Demand& f);

/// d^in(S) ≥ f(S) for every S (max-flows for (k,ℓ), enumeration for tables).
bool verify_covers(const Orientation& o, const UGraph& g, const Demand& f);

/// Desk-scale cap for enumerating demand-positive sets of table demands.
inline constexpr int kCutEnumerationCap = 20;

}  // namespace fos
