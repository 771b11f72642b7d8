#pragma once

#include "fos/orient.hpp"
#include "fos/solver.hpp"

#include <optional>
#include <vector>

namespace fos {

inline constexpr int kOracleNodeCap = 8;
inline constexpr int kOracleEdgeCap = 20;

struct ExactOpt {
  Rat cost;
  std::vector<std::size_t> chosen;  ///< purchasable-edge indices, ascending
};

/// Cheapest F ⊆ E*∖E making E ∪ F f-orientable, by scanning subsets in
/// nondecreasing cost order (ties: ascending bitmask). A known lower bound
/// lets the scan skip cheaper subsets. Nothing when even F = E*∖E fails.
/// Caps: n ≤ 8, |E*∖E| ≤ 20.
std::optional<ExactOpt> exact_opt(const Instance& inst, const std::optional<Rat>& lower_bound = std::nullopt);

/// Tries all 2^|E| orientations (Gray-code order, incremental in-degrees).
/// Cap: |E| ≤ 20 and n ≤ 16.
std::optional<Orientation> exact_orientation_search(const UGraph& g, const Demand& f);

}  // namespace fos
