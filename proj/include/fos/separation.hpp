#pragma once

#include "fos/lp2.hpp"

#include <span>
#include <vector>

namespace fos {

/// Largest node count the exhaustive separator accepts (Bell(10) ≈ 1.2e5 partitions).
inline constexpr int kSeparationCap = 10;

struct SeparationOptions {
  int max_rows = 5;
  /// For (k,ℓ) demands co-partition rows are normally skipped as redundant.
  /// With the audit on they are scanned too, and every co-partition row is
  /// checked against the partition row of its complements.
  bool audit_copartitions = false;
};

/// Up to max_rows most violated rows at x, ordered by violation (largest
/// first) and then by family encoding order. Empty iff x is feasible.
std::vector<Lp2Row> separate_lp2(const Lp2System& sys, std::span<const Rat> x, const SeparationOptions& opts = {});

/// Cutting-plane separator for solve_with_separation.
Separator lp2_separator(const Lp2System& sys, const SeparationOptions& opts = {});

/// Feasibility of x for a (k,ℓ) demand. For k = ℓ this is the cut condition
/// (every cut carries weight ≥ 2k, owned edges at weight 1), decided by n−1
/// max-flows; for k > ℓ it falls back to the exhaustive separator.
bool feasibility_precheck_kl(const Lp2System& sys, std::span<const Rat> x);

}  // namespace fos
