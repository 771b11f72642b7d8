#pragma once

#include "fos/demand.hpp"
#include "fos/graph.hpp"
#include "fos/lp2.hpp"
#include "fos/orient.hpp"
#include "fos/separation.hpp"

#include <string>
#include <variant>
#include <vector>

namespace fos {

/// Problem input: the free edges E, the purchasable edges E*∖E with their
/// costs, and the demand f.
struct Instance {
  int n = 0;
  std::vector<Edge> free_edges;
  std::vector<Edge> purchasable;
  std::vector<Rat> cost;
  Demand demand;
  NodeId root = 0;

  /// Throws InputError on malformed data or a demand that is not crossing
  /// supermodular relative to the free edges.
  void validate() const;
  UGraph free_graph() const;
  /// Free edges plus the chosen purchasable edges, in that order.
  UGraph augmented_graph(const std::vector<std::size_t>& chosen) const;
  /// The first-round relaxation: every purchasable edge is a variable.
  Lp2System lp2_system() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Threshold for fixing an edge in a rounding step.
inline const Rat kFixThreshold(1, 6);

struct RoundRecord {
  std::vector<std::size_t> variables;  ///< purchasable-edge indices that were LP variables
  std::vector<Rat> x;                  ///< basic optimal values, aligned with `variables`
  Rat objective;
  std::vector<std::size_t> dropped;  ///< x = 0
  std::vector<std::size_t> fixed;    ///< x ≥ 1/6
  int separation_rounds = 0;
  int rows_added = 0;
};

struct AugResult {
  std::vector<std::size_t> chosen;  ///< purchasable-edge indices, ascending
  Rat total_cost;
  Rat lp_lower_bound;
  std::vector<RoundRecord> rounds;
  /// Arcs for the free edges followed by the chosen edges.
  Orientation orientation;
};

struct InfeasibleInstance {
  /// A row violated even when every purchasable edge is bought.
  Lp2Row witness;
};

using SolveOutcome = std::variant<AugResult, InfeasibleInstance>;

struct SolveOptions {
  SeparationOptions separation;
  /// Run the strongly cross-free basis extraction on every basic solution.
  bool check_basis_each_round = false;
};

/// Iterative rounding: solve the relaxation to a vertex, drop x = 0 edges,
/// buy x ≥ 1/6 edges, repeat on the residual problem.
SolveOutcome solve(const Instance& inst, const SolveOptions& opts = {});

/// Lp2System of one rounding round: `owned` purchasable edges join the free
/// edges, `variables` stay undecided.
Lp2System residual_system(const Instance& inst, const std::vector<std::size_t>& owned,
                          const std::vector<std::size_t>& variables);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Certificate {
  std::vector<CertificateCheck> checks;
  bool passed() const;
};

/// Independent re-verification of a solver result.
Certificate certify(const AugResult& res, const Instance& inst);

}  // namespace fos
