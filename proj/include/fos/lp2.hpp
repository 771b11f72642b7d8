#pragma once

#include "fos/demand.hpp"
#include "fos/exactlp.hpp"
#include "fos/graph.hpp"
#include "fos/setfam.hpp"

#include <functional>
#include <span>
#include <vector>

namespace fos {

/// The partition/co-partition relaxation for one residual problem: edges in
/// `base` are already owned, `var_edges` are the undecided purchasable edges.
///
///   min Σ c_e x_e  s.t.  x(χ(𝒫)) ≥ Σ_{S∈𝒫} f(S) − e_base(𝒫)  for every
///   partition (≥ 2 parts) and co-partition (≥ 3 parts) 𝒫, 0 ≤ x ≤ 1.
///
/// Two-part co-partitions are the same families as two-part partitions and are
/// not listed twice.
struct Lp2System {
  int n = 0;
  NodeId root = 0;
  Demand demand;
  UGraph base;
  std::vector<Edge> var_edges;
  std::vector<Rat> var_cost;

  UGraph var_graph() const;
};

struct Lp2Row {
  PoCP family;
  Rat lhs;  ///< x(χ(𝒫)) over the variable edges
  int rhs = 0;
  Rat violation() const { return Rat(rhs) - lhs; }
};

int lp2_rhs(const Lp2System& sys, const PoCP& p);
/// Indices into var_edges of the variable edges in χ(𝒫).
std::vector<std::size_t> lp2_support(const Lp2System& sys, const PoCP& p);
Rat lp2_lhs(const Lp2System& sys, const PoCP& p, std::span<const Rat> x);
/// 0/1 coefficient vector of the row over the variables.
std::vector<Rat> lp2_vector(const Lp2System& sys, const PoCP& p);
LpRow to_lp_row(const Lp2System& sys, const PoCP& p);

/// Variables and bounds only.
LpProblem lp2_base_problem(const Lp2System& sys);
/// Every row with positive right side.
LpProblem materialize_lp2(const Lp2System& sys, bool include_copartitions = true);

enum class RowFilter { All, Violated, Tight };

struct ScanOptions {
  bool include_copartitions = true;
  RowFilter filter = RowFilter::All;
  int cap = kEnumerationCap;
};

/// Evaluates every LP row at x by exhaustive enumeration and hands the rows
/// passing the filter to `fn`.
void scan_lp2_rows(const Lp2System& sys, std::span<const Rat> x, const ScanOptions& opts,
                   const std::function<void(const Lp2Row&)>& fn);

/// Tight rows at x whose coefficient vector is nonzero.
std::vector<Lp2Row> tight_rows(const Lp2System& sys, std::span<const Rat> x);

}  // namespace fos
