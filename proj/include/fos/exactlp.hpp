#pragma once

#include "fos/rational.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fos {

enum class Sense { Ge, Le, Eq };

struct LpVariable {
  std::string name;
  Rat lower = 0;
  Rat upper = 1;
  Rat cost = 0;
};

struct LpRow {
  std::vector<std::pair<int, Rat>> coeffs;  ///< sparse (variable, coefficient)
  Sense sense = Sense::Ge;
  Rat rhs = 0;
  /// Identity used to deduplicate generated rows; also the row name in dumps.
  std::string key;

  Rat activity(std::span<const Rat> x) const;
  bool satisfied_by(std::span<const Rat> x) const;
};

/// minimize Σ cost·x  s.t. rows, lower ≤ x ≤ upper (all bounds finite).
struct LpProblem {
  std::vector<LpVariable> vars;
  std::vector<LpRow> rows;

  int add_var(std::string name, Rat lower, Rat upper, Rat cost);
  void add_row(LpRow row) { rows.push_back(std::move(row)); }
  std::size_t var_count() const { return vars.size(); }
};

/// One constraint that holds with equality at a vertex.
struct ActiveConstraint {
  enum class Kind { Row, Lower, Upper };
  Kind kind = Kind::Row;
  int index = 0;  ///< row index or variable index
  friend bool operator==(const ActiveConstraint&, const ActiveConstraint&) = default;
};

struct BasicSolution {
  std::vector<Rat> values;
  Rat objective = 0;
  /// var_count linearly independent active constraints that pin the vertex.
  std::vector<ActiveConstraint> basis;
};

/// Multipliers proving {rows, bounds} empty: Σ λ_i·row_i + Σ α_j·(x_j ≥ l_j)
/// + Σ β_j·(−x_j ≥ −u_j) has all-zero coefficients and a positive right side.
/// λ_i ≥ 0 on ≥ rows, ≤ 0 on ≤ rows, free on = rows; α, β ≥ 0.
struct FarkasCertificate {
  std::vector<Rat> row_multipliers;
  std::vector<Rat> lower_multipliers;
  std::vector<Rat> upper_multipliers;
};

struct Infeasible {
  FarkasCertificate certificate;
};

using LpResult = std::variant<BasicSolution, Infeasible>;

/// Two-phase dense tableau simplex over exact rationals with Bland's rule.
/// Returns an optimal vertex, or an infeasibility certificate.
LpResult solve_basic(const LpProblem& p);

bool verify_certificate(const LpProblem& p, const FarkasCertificate& cert);

/// Constraints active at x, in row-then-bound order.
std::vector<ActiveConstraint> active_constraints(const LpProblem& p, std::span<const Rat> x);

/// The dense coefficient vector of one constraint over the variables.
std::vector<Rat> constraint_vector(const LpProblem& p, const ActiveConstraint& c);

/// x is feasible and its active constraints have rank var_count.
bool is_vertex(const LpProblem& p, std::span<const Rat> x);

bool is_feasible(const LpProblem& p, std::span<const Rat> x);

using Separator = std::function<std::vector<LpRow>(std::span<const Rat>)>;

struct SeparationLoopStats {
  int rounds = 0;
  int rows_added = 0;
};

/// Cutting-plane loop: solve the base problem plus rows generated so far,
/// ask `sep` for violated rows at the vertex, repeat until none. A vertex of
/// the relaxation that is feasible for the full system is a vertex of the
/// full system. Throws ContractViolation if `sep` returns only rows that are
/// already present.
LpResult solve_with_separation(const LpProblem& base, const Separator& sep, SeparationLoopStats* stats = nullptr,
                               LpProblem* final_problem = nullptr);

/// CPLEX-style LP text dump for debugging.
void write_lp(std::ostream& out, const LpProblem& p);

}  // namespace fos
