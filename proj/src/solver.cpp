#include "fos/solver.hpp"

#include "fos/errors.hpp"
#include "fos/uncross.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fos {

void Instance::validate() const {
  if (n < 2 || n > kMaxNodes) throw InputError("node count must lie in [2, " + std::to_string(kMaxNodes) + "]");
  if (root < 0 || root >= n) throw InputError("root out of range");
  if (demand.node_count() != n) throw InputError("demand is defined over " + std::to_string(demand.node_count()) +
                                                 " nodes, instance has " + std::to_string(n));
  auto check_edge = [&](const Edge& e, const std::string& where) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InputError(where + ": endpoint out of range");
    if (e.u == e.v) throw InputError(where + ": self-loop");
  };
  for (std::size_t i = 0; i < free_edges.size(); ++i) check_edge(free_edges[i], "free edge " + std::to_string(i));
  for (std::size_t i = 0; i < purchasable.size(); ++i) check_edge(purchasable[i], "purchasable edge " + std::to_string(i));
  if (cost.size() != purchasable.size()) throw InputError("one cost per purchasable edge required");
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (cost[i] < 0) throw InputError("purchasable edge " + std::to_string(i) + " has negative cost");
  }
  if (!demand.is_kl()) {
    if (auto bad = check_crossing_gsupermodular(demand, free_graph())) {
      throw InputError("demand is not crossing supermodular: violated on " + bad->first.to_string() + " and " +
                       bad->second.to_string());
    }
  }
}

UGraph Instance::free_graph() const { return UGraph(n, free_edges); }

UGraph Instance::augmented_graph(const std::vector<std::size_t>& chosen) const {
  UGraph g = free_graph();
  for (std::size_t i : chosen) g.add_edge(purchasable.at(i).u, purchasable.at(i).v);
  return g;
}

Lp2System residual_system(const Instance& inst, const std::vector<std::size_t>& owned,
                          const std::vector<std::size_t>& variables) {
  Lp2System sys;
  sys.n = inst.n;
  sys.root = inst.root;
  sys.demand = inst.demand;
  sys.base = inst.augmented_graph(owned);
  for (std::size_t i : variables) {
    sys.var_edges.push_back(inst.purchasable[i]);
    sys.var_cost.push_back(inst.cost[i]);
  }
  return sys;
}

Lp2System Instance::lp2_system() const {
  std::vector<std::size_t> all(purchasable.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return residual_system(*this, {}, all);
}

SolveOutcome solve(const Instance& inst, const SolveOptions& opts) {
  inst.validate();
  {
    const Lp2System sys = inst.lp2_system();
    const std::vector<Rat> ones(sys.var_edges.size(), 1);
    SeparationOptions one = opts.separation;
    one.max_rows = 1;
    auto violated = separate_lp2(sys, ones, one);
    if (!violated.empty()) return InfeasibleInstance{violated.front()};
  }

  AugResult res;
  std::vector<std::size_t> owned;
  std::vector<std::size_t> remaining(inst.purchasable.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::optional<Rat> bound;  // previous optimum minus the cost share of the edges fixed then

  while (!remaining.empty()) {
    const Lp2System sys = residual_system(inst, owned, remaining);
    {
      SeparationOptions one = opts.separation;
      one.max_rows = 1;
      const std::vector<Rat> zero(remaining.size(), 0);
      if (separate_lp2(sys, zero, one).empty()) break;  // owned edges already suffice
    }
    SeparationLoopStats stats;
    const LpResult lp = solve_with_separation(lp2_base_problem(sys), lp2_separator(sys, opts.separation), &stats);
    require_contract(std::holds_alternative<BasicSolution>(lp), "residual relaxation became infeasible");
    const BasicSolution& sol = std::get<BasicSolution>(lp);

    RoundRecord rec;
    rec.variables = remaining;
    rec.x = sol.values;
    rec.objective = sol.objective;
    rec.separation_rounds = stats.rounds;
    rec.rows_added = stats.rows_added;

    Rat max_x = 0;
    for (const Rat& v : sol.values) max_x = std::max(max_x, v);
    if (max_x > 0) {
      require_contract(max_x >= kFixThreshold, "basic solution has no edge at or above 1/6 (largest value " +
                                                   to_string(max_x) + ")");
    }
    if (bound) {
      require_contract(sol.objective <= *bound, "relaxation optimum increased after rounding");
    }
    if (opts.check_basis_each_round) {
      const BasisFamily basis = extract_strongly_crossfree_basis(sys, sol.values);
      require_contract(check_basis(basis).ok(), "basis family failed verification");
    }

    Rat fixed_share = 0;
    std::vector<std::size_t> next;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      const Rat& v = sol.values[j];
      if (v == 0) {
        rec.dropped.push_back(remaining[j]);
      } else if (v >= kFixThreshold) {
        rec.fixed.push_back(remaining[j]);
        owned.push_back(remaining[j]);
        fixed_share += inst.cost[remaining[j]] * v;
      } else {
        next.push_back(remaining[j]);
      }
    }
    require_contract(next.size() < remaining.size(), "rounding step made no progress");
    bound = sol.objective - fixed_share;
    if (res.rounds.empty()) res.lp_lower_bound = sol.objective;
    res.rounds.push_back(std::move(rec));
    remaining = std::move(next);
  }

  std::sort(owned.begin(), owned.end());
  res.chosen = owned;
  res.total_cost = 0;
  for (std::size_t i : owned) res.total_cost += inst.cost[i];
  res.orientation = extract_orientation(inst.augmented_graph(owned), inst.demand);
  return res;
}

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

Certificate certify(const AugResult& res, const Instance& inst) {
  Certificate cert;
  auto add = [&](std::string name, bool ok, std::string detail) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  std::set<std::size_t> seen;
  bool subset_ok = true;
  for (std::size_t i : res.chosen) {
    if (i >= inst.purchasable.size() || !seen.insert(i).second) subset_ok = false;
  }
  add("chosen_edges_purchasable", subset_ok, std::to_string(res.chosen.size()) + " edges chosen");
  if (!subset_ok) return cert;

  Rat total = 0;
  for (std::size_t i : res.chosen) total += inst.cost[i];
  add("cost_arithmetic", total == res.total_cost, "recomputed " + to_string(total) + ", reported " +
                                                      to_string(res.total_cost));

  const UGraph g = inst.augmented_graph(res.chosen);
  OrientabilityOptions oo;
  oo.root = inst.root;
  const auto verdict = is_f_orientable(g, inst.demand, oo);
  add("f_orientable", verdict.orientable,
      verdict.witness ? "violated by " + verdict.witness->encode() : std::string("all rows hold"));

  add("orientation_covers", verify_covers(res.orientation, g, inst.demand),
      std::to_string(res.orientation.size()) + " arcs");

  const Lp2System sys = inst.lp2_system();
  const LpResult lp = solve_with_separation(lp2_base_problem(sys), lp2_separator(sys));
  const bool bound_ok =
      std::holds_alternative<BasicSolution>(lp) && std::get<BasicSolution>(lp).objective == res.lp_lower_bound;
  add("lp_bound_matches", bound_ok,
      std::holds_alternative<BasicSolution>(lp)
          ? "relaxation optimum " + to_string(std::get<BasicSolution>(lp).objective)
          : std::string("relaxation infeasible"));

  add("ratio_bound", res.total_cost <= 6 * res.lp_lower_bound,
      to_string(res.total_cost) + " <= 6 * " + to_string(res.lp_lower_bound));
  return cert;
}

}  // namespace fos
