#pragma once

#include "fos/exactlp.hpp"
#include "fos/graph.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace fos {

/// Mixed-graph augmentation instance on 2n nodes u_1..u_n (ids 0..n-1) and
/// v_1..v_n (ids n..2n-1) with k-arc-connectivity demand.
///
/// mixed.arcs holds A_G (2n−1 arcs), then A_B (two reverse copies of each A_G
/// arc), then k−2 directed Hamiltonian cycles u_1..u_n, v_n..v_1.
/// mixed.uedges holds the free rails {u_i,u_{i+1}} then {v_i,v_{i+1}}.
/// The single purchasable edge is {u_n, v_1} at cost 1.
struct GapInstance {
  int n = 0;
  int k = 2;
  MixedGraph mixed;
  std::size_t ag_count = 0;
  std::size_t ab_count = 0;
  std::size_t cycle_arc_count = 0;
  Edge extra;
  Rat extra_cost = 1;

  NodeId u(int i) const { return i - 1; }
  NodeId v(int i) const { return n + i - 1; }
  int node_count() const { return 2 * n; }
};

GapInstance build_gap_instance(int n, int k);

/// S_1..S_n then T_1..T_{n-1}.
std::vector<NodeSet> fundamental_cuts(const GapInstance& gi);

/// The relaxation with y per direction of every free edge and of the extra
/// edge, and x for the extra edge.
/// Variable layout: 2i / 2i+1 are the two directions of free edge i (stored
/// direction first), 2m / 2m+1 are u_n→v_1 / v_1→u_n, 2m+2 is x.
struct Lp3 {
  LpProblem lp;
  std::vector<Arc> directions;  ///< arc of each y variable
  int x_var = 0;
};

/// Cut rows for every ∅ ≠ Z ⊊ V are added when `materialize` is set
/// (2n ≤ 14); otherwise only the equality rows are present and cut rows are
/// generated on demand by lp3_solve.
Lp3 lp3_build(const GapInstance& gi, bool materialize);

/// Cut separator: rows y(δ^in(Z)) ≥ k − d^in_A(Z) violated at a point.
Separator lp3_separator(const GapInstance& gi, const Lp3& l3);

/// Optimal value of the relaxation (row generation, exact).
Rat lp3_value(const GapInstance& gi);

/// The closed-form fractional point (k = 2), in lp3_build's variable layout.
std::vector<Rat> closed_form_fractional_point(const GapInstance& gi);

/// Feasibility of a point against every cut row (full enumeration).
bool lp3_feasible(const GapInstance& gi, const Lp3& l3, std::span<const Rat> point);

/// Brute force over orientations of the free edges and the three choices for
/// the extra edge (absent, either direction). Nothing if no choice works.
std::optional<Rat> integral_optimum(const GapInstance& gi);

struct CutCounts {
  int demand = 0;  ///< k per fundamental cut
  int supply = 0;  ///< arcs of A plus oriented free edges entering the cuts
};

/// Supply is checked to be the same for every orientation of the free edges.
CutCounts fundamental_cut_counts(const GapInstance& gi);

/// The cost-one orientation: rails forward, extra edge u_n→v_1.
std::vector<Arc> cost_one_solution(const GapInstance& gi);

/// The gap instance written as the y-system with fixed edges: A's arcs become
/// free edges oriented along A, then the fractional point is placed on top.
struct Lp1Reencoding {
  LpProblem lp;
  std::vector<Rat> point;
  bool feasible = false;
  std::optional<bool> vertex;  ///< checked for n ≤ 4
  Rat max_fractional_x;
};
Lp1Reencoding lp1_reencoding(const GapInstance& gi);

struct GapRow {
  int n = 0;
  int k = 0;
  Rat lp_value;
  Rat integral_value;
  Rat ratio;
};

std::vector<GapRow> gap_report(int n_min, int n_max, int k);
void write_gap_table(std::ostream& out, const std::vector<GapRow>& rows);

}  // namespace fos
