// Acceptance run: one PASS/FAIL line per criterion.

#include "fos/errors.hpp"
#include "fos/gaplab.hpp"
#include "fos/oracle.hpp"
#include "fos/orient.hpp"
#include "fos/random_instances.hpp"
#include "fos/separation.hpp"
#include "fos/solver.hpp"
#include "fos/uncross.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace fos;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;
std::map<int, std::string> lines;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  lines[id] = std::string(ok ? "PASS " : "FAIL ") + std::to_string(id) + " " + name + ": " + detail;
  std::cerr << lines[id] << std::endl;
  if (!ok) ++failures;
}

UGraph complete(int n) {
  UGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

bool fractional(const Rat& v) { return v > 0 && v < 1; }

/// Runs every property of the basis extraction on one vertex. Returns the
/// number of members, or -1 on a failed property.
int basis_properties(const Lp2System& sys, const std::vector<Rat>& x, std::string& why) {
  std::size_t frac = 0;
  for (const Rat& v : x) frac += fractional(v) ? 1 : 0;
  int size = -1;
  for (BasisStrategy strategy : {BasisStrategy::Greedy, BasisStrategy::Descent}) {
    const BasisFamily b = extract_strongly_crossfree_basis(sys, x, strategy);
    const BasisCheck chk = check_basis(b);
    if (!chk.ok() || b.members.size() != frac) {
      why = "basis check failed";
      return -1;
    }
    for (std::size_t i = 0; i < b.members.size(); ++i) {
      for (std::size_t j = i + 1; j < b.members.size(); ++j) {
        if (!strongly_cross_free(b.members[i], b.members[j])) {
          why = "members not strongly cross-free";
          return -1;
        }
      }
    }
    const DominationForest forest = domination_forest(b.members);
    for (std::size_t i = 0; i < b.members.size(); ++i) {
      for (std::size_t j = 0; j < b.members.size(); ++j) {
        if (i != j && forest.is_ancestor(j, i) != precedes(b.members[i], b.members[j])) {
          why = "forest disagrees with pairwise order";
          return -1;
        }
      }
    }
    size = static_cast<int>(b.members.size());
  }
  return size;
}

struct VertexSample {
  Lp2System sys;
  std::vector<Rat> x;
};

/// First vertex of the relaxation on a complete graph of purchasable edges.
std::optional<VertexSample> complete_graph_vertex(Rng& rng, int n) {
  Instance inst;
  inst.n = n;
  const int k = uniform_int(rng, 1, 2);
  inst.root = uniform_int(rng, 0, n - 1);
  inst.demand = Demand::kl(n, k, uniform_int(rng, 0, k), inst.root);
  const UGraph kn = complete(n);
  for (const Edge& e : kn.edges()) {
    inst.purchasable.push_back(e);
    inst.cost.emplace_back(uniform_int(rng, 1, 20));
  }
  const Lp2System sys = inst.lp2_system();
  const LpResult lp = solve_with_separation(lp2_base_problem(sys), lp2_separator(sys));
  if (!std::holds_alternative<BasicSolution>(lp)) return std::nullopt;
  return VertexSample{sys, std::get<BasicSolution>(lp).values};
}

std::vector<int> chi_sum_over(const UGraph& g, std::initializer_list<const PoCP*> fams) {
  std::vector<int> v(g.edge_count(), 0);
  for (const PoCP* f : fams) {
    for (std::size_t i : chi(*f, g)) ++v[i];
  }
  return v;
}

std::vector<int> chi_sum_over(const UGraph& g, const std::vector<PoCP>& fams) {
  std::vector<int> v(g.edge_count(), 0);
  for (const PoCP& f : fams) {
    for (std::size_t i : chi(f, g)) ++v[i];
  }
  return v;
}

bool tight(const Lp2System& sys, const std::vector<Rat>& x, const PoCP& p) {
  return lp2_lhs(sys, p, x) == lp2_rhs(sys, p);
}

Instance sparse_instance(Rng& rng, DemandKind kind) {
  InstanceParams params;
  params.n = uniform_int(rng, 3, 7);
  params.free_edges = uniform_int(rng, 0, params.n - 1);
  params.purchasable = uniform_int(rng, 6, 12);
  params.demand = kind;
  return random_instance(rng, params);
}

/// Every pair purchasable on 4 or 5 nodes, topped up with parallel edges to 12.
Instance dense_instance(Rng& rng, DemandKind kind) {
  Instance inst;
  inst.n = uniform_int(rng, 4, 5);
  const UGraph kn = complete(inst.n);
  inst.purchasable = kn.edges();
  while (inst.purchasable.size() < 12) {
    const Edge& e = kn.edge(uniform_int(rng, 0, static_cast<int>(kn.edge_count()) - 1));
    inst.purchasable.push_back(e);
  }
  for (std::size_t i = 0; i < inst.purchasable.size(); ++i) inst.cost.emplace_back(uniform_int(rng, 1, 20));
  switch (kind) {
    case DemandKind::KL10: inst.demand = Demand::kl(inst.n, 1, 0, 0); break;
    case DemandKind::KL11: inst.demand = Demand::kl(inst.n, 1, 1, 0); break;
    case DemandKind::KL21: inst.demand = Demand::kl(inst.n, 2, 1, 0); break;
    case DemandKind::KL22: inst.demand = Demand::kl(inst.n, 2, 2, 0); break;
    case DemandKind::Table: {
      const int k = uniform_int(rng, 1, 2);
      inst.demand = random_table_demand(rng, inst.free_graph(), k, uniform_int(rng, 0, k), 12);
      break;
    }
  }
  inst.validate();
  return inst;
}

void approximation_and_rounding() {
  const auto t0 = Clock::now();
  Rng rng(20241);
  int feasible = 0, infeasible = 0, bad_ratio = 0, bad_bound = 0, bad_cert = 0, errors = 0;
  int rounds = 0, fractional_rounds = 0, threshold_violations = 0;
  int bases = 0, nontrivial_bases = 0, basis_failures = 0;
  Rat worst_ratio = 0;
  std::string basis_why;
  const DemandKind kinds[] = {DemandKind::KL10, DemandKind::KL11, DemandKind::KL21, DemandKind::KL22,
                              DemandKind::Table};
  int attempt = 0;
  while (feasible < 1500 && attempt < 6000) {
    const DemandKind kind = kinds[(attempt / 2) % 5];
    const bool dense = attempt % 2 == 1;
    ++attempt;
    try {
      const Instance inst = dense ? dense_instance(rng, kind) : sparse_instance(rng, kind);
      const SolveOutcome out = solve(inst);
      const auto opt = exact_opt(inst);
      if (!std::holds_alternative<AugResult>(out)) {
        ++infeasible;
        if (opt) ++errors;
        continue;
      }
      if (!opt) {
        ++errors;
        continue;
      }
      ++feasible;
      const auto& res = std::get<AugResult>(out);
      if (res.total_cost < opt->cost || res.total_cost > 6 * opt->cost) ++bad_ratio;
      if (res.total_cost < res.lp_lower_bound || res.lp_lower_bound > opt->cost) ++bad_bound;
      if (!certify(res, inst).passed()) ++bad_cert;
      if (opt->cost > 0) worst_ratio = std::max(worst_ratio, Rat(res.total_cost / opt->cost));

      for (const RoundRecord& r : res.rounds) {
        ++rounds;
        Rat mx = 0;
        bool any = false;
        for (const Rat& v : r.x) {
          if (fractional(v)) any = true;
          mx = std::max(mx, v);
        }
        if (!any) continue;
        ++fractional_rounds;
        if (mx < kFixThreshold) ++threshold_violations;
      }

      if (!res.rounds.empty()) {
        const RoundRecord& first = res.rounds.front();
        const Lp2System sys = residual_system(inst, {}, first.variables);
        ++bases;
        const int size = basis_properties(sys, first.x, basis_why);
        if (size < 0) ++basis_failures;
        if (size > 0) ++nontrivial_bases;
      }
    } catch (const ContractViolation& e) {
      ++errors;
      ++threshold_violations;
      std::cerr << "contract violation: " << e.what() << "\n";
    } catch (const std::exception& e) {
      ++errors;
      std::cerr << "error: " << e.what() << "\n";
    }
  }
  const double secs = seconds_since(t0);

  // extra fractional vertices so the extraction is exercised on nontrivial bases
  int extra = 0, extra_nontrivial = 0;
  for (int trial = 0; trial < 3000 && extra_nontrivial < 40; ++trial) {
    try {
      const auto s = complete_graph_vertex(rng, uniform_int(rng, 4, 6));
      if (!s) continue;
      ++extra;
      const int size = basis_properties(s->sys, s->x, basis_why);
      if (size < 0) ++basis_failures;
      if (size > 0) ++extra_nontrivial;
    } catch (const std::exception& e) {
      ++basis_failures;
      basis_why = e.what();
    }
  }

  std::ostringstream d1;
  d1 << feasible << " feasible (" << infeasible << " infeasible skipped), ratio violations " << bad_ratio
     << ", bound violations " << bad_bound << ", certificate failures " << bad_cert << ", errors " << errors
     << ", worst cost/opt " << to_string(worst_ratio) << ", " << static_cast<int>(secs) << " s (limit 600)";
  report(1, "approximation-bound", feasible >= 200 && bad_ratio == 0 && bad_bound == 0 && bad_cert == 0 &&
                                       errors == 0 && secs < 600,
         d1.str());

  std::ostringstream d2;
  d2 << rounds << " rounds, " << fractional_rounds << " with fractional edges, " << threshold_violations
     << " below 1/6";
  report(2, "rounding-threshold", feasible >= 200 && threshold_violations == 0, d2.str());

  std::ostringstream d7;
  d7 << bases << " first-round vertices (" << nontrivial_bases << " fractional) plus " << extra
     << " complete-graph vertices (" << extra_nontrivial << " fractional), " << basis_failures << " failures";
  if (basis_failures > 0) d7 << " [" << basis_why << "]";
  report(7, "basis-extraction", bases > 0 && basis_failures == 0 && extra_nontrivial > 0, d7.str());
}

void orientability_vs_search() {
  Rng rng(20242);
  int agree = 0, disagree = 0, yes = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = uniform_int(rng, 2, 6);
    const UGraph g = random_graph(rng, n, uniform_int(rng, 0, 10));
    Demand f;
    if (trial % 3 == 0) {
      f = random_table_demand(rng, g, uniform_int(rng, 0, 2), 0, 12);
    } else {
      const int k = uniform_int(rng, 1, 2);
      f = random_kl(rng, n, k, uniform_int(rng, 0, k));
    }
    const bool a = is_f_orientable(g, f).orientable;
    const bool b = exact_orientation_search(g, f).has_value();
    (a == b ? agree : disagree)++;
    yes += b ? 1 : 0;
  }
  std::ostringstream d;
  d << agree << " agreements, " << disagree << " disagreements, " << yes << " orientable";
  report(3, "orientability-equivalence", agree >= 500 && disagree == 0, d.str());
}

void nash_williams() {
  Rng rng(20243);
  int agree = 0, disagree = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = uniform_int(rng, 2, 7);
    const UGraph g = random_graph(rng, n, uniform_int(rng, n - 1, 4 * n));
    const int k = uniform_int(rng, 1, 2);
    const bool a = is_f_orientable(g, Demand::kl(n, k, k, 0)).orientable;
    const bool b = edge_connectivity(g) >= 2 * k;
    (a == b ? agree : disagree)++;
  }
  std::ostringstream d;
  d << agree << " agreements, " << disagree << " disagreements";
  report(4, "nash-williams", agree >= 300 && disagree == 0, d.str());
}

void integrality_gap() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  try {
    for (int n = 2; n <= 6; ++n) {
      const GapInstance gi = build_gap_instance(n, 2);
      const Rat lp = lp3_value(gi);
      const auto integral = integral_optimum(gi);
      const CutCounts c = fundamental_cut_counts(gi);
      const bool row = lp == make_rat(1, n) && integral == std::optional<Rat>(1) && Rat(*integral / lp) == n &&
                       c.supply == 4 * n - 3 && c.demand == 4 * n - 2;
      ok = ok && row;
      d << "n=" << n << " lp " << to_string(lp) << " int " << (integral ? to_string(*integral) : "none") << " cuts "
        << c.supply << "/" << c.demand << "; ";
    }
    const GapInstance g3 = build_gap_instance(3, 3);
    const Rat lp = lp3_value(g3);
    const auto integral = integral_optimum(g3);
    const bool k3 = integral.has_value() && lp > 0 && Rat(*integral / lp) == 3;
    ok = ok && k3;
    d << "k=3 n=3 ratio " << (integral && lp > 0 ? to_string(Rat(*integral / lp)) : "none");
  } catch (const std::exception& e) {
    ok = false;
    d << "error: " << e.what();
  }
  const double secs = seconds_since(t0);
  d << ", " << static_cast<int>(secs) << " s (limit 300)";
  report(5, "integrality-gap", ok && secs < 300, d.str());
}

void uncrossing_algebra() {
  Rng rng(20244);
  int pairs = 0, identity_fail = 0, strong_fail = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = uniform_int(rng, 3, 8);
    const NodeId root = uniform_int(rng, 0, n - 1);
    const auto [p, q] = random_weakly_crossfree_pair(rng, n, root);
    const UpsilonResult u = upsilon(p, q);
    const UGraph kn = complete(n);
    ++pairs;
    if (chi_sum_over(kn, {&p, &q}) != chi_sum_over(kn, u.members)) ++identity_fail;
    for (const PoCP& r : u.members) {
      if (!strongly_cross_free(r, p) || !strongly_cross_free(r, q)) ++strong_fail;
    }
  }

  // tightness preservation on weakly cross-free pairs of tight rows, and
  // nonnegativity of Ψ on cross-free regular families, both at vertices
  int tight_pairs = 0, tight_fail = 0, families = 0, psi_fail = 0, psi_zero = 0;
  for (int trial = 0; trial < 4000 && (tight_pairs < 200 || families < 1000); ++trial) {
    const auto s = complete_graph_vertex(rng, uniform_int(rng, 4, 6));
    if (!s) continue;
    const auto rows = tight_rows(s->sys, s->x);
    for (std::size_t i = 0; i < rows.size() && tight_pairs < 200; ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (!weakly_cross_free(rows[i].family, rows[j].family)) continue;
        ++tight_pairs;
        for (const PoCP& r : upsilon(rows[i].family, rows[j].family).members) {
          if (!tight(s->sys, s->x, r)) ++tight_fail;
        }
      }
    }
    for (int f = 0; f < 25; ++f) {
      const SetFamily fam = random_crossfree_regular(rng, s->sys.n, s->sys.root, uniform_int(rng, 1, 4));
      const Rat v = psi(s->sys, s->x, fam);
      ++families;
      if (v < 0) ++psi_fail;
      if (v == 0) {
        ++psi_zero;
        for (const PoCP& r : decompose_regular_crossfree(fam, s->sys.n, s->sys.root)) {
          if (!tight(s->sys, s->x, r)) ++psi_fail;
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs (identity failures " << identity_fail << ", strong cross-freeness failures " << strong_fail
    << "), " << tight_pairs << " tight pairs (" << tight_fail << " untight members), " << families
    << " regular families (" << psi_zero << " with zero potential, " << psi_fail << " failures)";
  report(6, "uncrossing-algebra", pairs >= 1000 && identity_fail == 0 && strong_fail == 0 && tight_pairs > 0 &&
                                      tight_fail == 0 && families >= 1000 && psi_fail == 0,
         d.str());
}

void root_independence() {
  Rng rng(20245);
  int graphs = 0, mismatches = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = uniform_int(rng, 2, 6);
    const UGraph g = random_graph(rng, n, uniform_int(rng, n - 1, 3 * n));
    const int k = uniform_int(rng, 1, 2);
    const int l = uniform_int(rng, 0, k);
    const bool first = is_f_orientable(g, Demand::kl(n, k, l, 0)).orientable;
    for (NodeId r = 1; r < n; ++r) {
      OrientabilityOptions opts;
      opts.root = r;
      if (is_f_orientable(g, Demand::kl(n, k, l, r), opts).orientable != first) ++mismatches;
    }
    ++graphs;
  }
  std::ostringstream d;
  d << graphs << " graphs, " << mismatches << " mismatches";
  report(8, "root-independence", graphs >= 100 && mismatches == 0, d.str());
}

}  // namespace

int main() {
  approximation_and_rounding();
  orientability_vs_search();
  nash_williams();
  integrality_gap();
  uncrossing_algebra();
  root_independence();
  for (const auto& [id, line] : lines) std::cout << line << "\n";
  return failures == 0 ? 0 : 1;
}
