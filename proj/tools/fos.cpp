// Command-line front end for the augmentation solver and its checkers.

#include "fos/errors.hpp"
#include "fos/gaplab.hpp"
#include "fos/io.hpp"
#include "fos/oracle.hpp"
#include "fos/random_instances.hpp"
#include "fos/solver.hpp"
#include "fos/uncross.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace fos;

enum ExitCode { kOk = 0, kUsage = 1, kInfeasible = 2, kCap = 3, kContract = 4, kCertificateFailed = 5 };

struct Common {
  bool decimal = false;
  bool json = false;
};

std::string show(const Rat& r, const Common& c) {
  return c.decimal ? to_string(r) + " (" + to_decimal(r) + ")" : to_string(r);
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string edge_str(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

int report_infeasible(const InfeasibleInstance& inf, const Common& c) {
  if (c.json) {
    std::cout << Json{{"feasible", false}, {"witness", inf.witness.family.encode()},
                      {"rhs", inf.witness.rhs}, {"lhs_at_all_ones", rat_to_json(inf.witness.lhs)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "infeasible: even buying every edge violates " << inf.witness.family.encode() << " (needs "
              << inf.witness.rhs << ", has " << to_string(inf.witness.lhs) << ")\n";
  }
  return kInfeasible;
}

int cmd_solve(const std::string& path, const SolveOptions& opts, const std::string& out_path,
              const std::string& lp_path, const Common& c) {
  const Instance inst = read_instance(path);
  const SolveOutcome outcome = solve(inst, opts);
  if (auto* inf = std::get_if<InfeasibleInstance>(&outcome)) return report_infeasible(*inf, c);
  const AugResult& res = std::get<AugResult>(outcome);
  if (!lp_path.empty()) {
    const Lp2System sys = inst.lp2_system();
    LpProblem final_lp;
    solve_with_separation(lp2_base_problem(sys), lp2_separator(sys, opts.separation), nullptr, &final_lp);
    std::ofstream lp(lp_path);
    if (!lp) throw InputError("cannot write " + lp_path);
    write_lp(lp, final_lp);
  }
  const Json j = result_to_json(res, c.decimal);
  if (!out_path.empty()) write_file(out_path, j);
  if (c.json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "chosen edges:";
  if (res.chosen.empty()) std::cout << " none";
  for (std::size_t i : res.chosen) std::cout << " " << i << edge_str(inst.purchasable[i]);
  std::cout << "\ncost:           " << show(res.total_cost, c) << "\n";
  std::cout << "lp lower bound: " << show(res.lp_lower_bound, c) << "\n";
  if (res.lp_lower_bound > 0) {
    std::cout << "cost / bound:   " << show(res.total_cost / res.lp_lower_bound, c) << "\n";
  }
  for (std::size_t r = 0; r < res.rounds.size(); ++r) {
    const RoundRecord& rec = res.rounds[r];
    std::cout << "round " << r + 1 << ": " << rec.variables.size() << " variables, objective "
              << show(rec.objective, c) << ", " << rec.separation_rounds << " separation rounds, "
              << rec.rows_added << " rows; x =";
    for (std::size_t m = 0; m < rec.x.size(); ++m) std::cout << " " << rec.variables[m] << ":" << to_string(rec.x[m]);
    std::cout << "; fixed " << rec.fixed.size() << ", dropped " << rec.dropped.size() << "\n";
  }
  std::cout << "orientation:";
  for (const Arc& a : res.orientation) std::cout << " " << a.tail << "->" << a.head;
  std::cout << "\n";
  return kOk;
}

int cmd_certify(const std::string& inst_path, const std::string& res_path, const Common& c) {
  const Instance inst = read_instance(inst_path);
  AugResult res;
  try {
    res = result_from_json(read_json_file(res_path));
  } catch (const InputError& e) {
    throw InputError(res_path + ": " + e.what());
  }
  const Certificate cert = certify(res, inst);
  if (c.json) {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  } else {
    for (const CertificateCheck& chk : cert.checks) {
      std::cout << (chk.passed ? "PASS " : "FAIL ") << chk.name << "  " << chk.detail << "\n";
    }
  }
  return cert.passed() ? kOk : kCertificateFailed;
}

int cmd_oracle(const std::string& path, const Common& c) {
  const Instance inst = read_instance(path);
  const auto opt = exact_opt(inst);
  if (!opt) {
    if (c.json) {
      std::cout << Json{{"feasible", false}}.dump(2) << "\n";
    } else {
      std::cout << "infeasible: buying every edge is not enough\n";
    }
    return kInfeasible;
  }
  if (c.json) {
    std::cout << Json{{"feasible", true}, {"cost", rat_to_json(opt->cost)}, {"chosen", opt->chosen}}.dump(2) << "\n";
  } else {
    std::cout << "optimum cost: " << show(opt->cost, c) << "\nchosen edges:";
    if (opt->chosen.empty()) std::cout << " none";
    for (std::size_t i : opt->chosen) std::cout << " " << i << edge_str(inst.purchasable[i]);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_orient(const std::string& path, const Common& c) {
  const Instance inst = read_instance(path);
  const UGraph g = inst.free_graph();
  OrientabilityOptions oo;
  oo.root = inst.root;
  const auto verdict = is_f_orientable(g, inst.demand, oo);
  if (!verdict.orientable) {
    const std::string w = verdict.witness ? verdict.witness->encode() : std::string("?");
    if (c.json) {
      std::cout << Json{{"orientable", false}, {"witness", w}}.dump(2) << "\n";
    } else {
      std::cout << "not orientable: violated by " << w << "\n";
    }
    return kInfeasible;
  }
  const Orientation o = extract_orientation(g, inst.demand);
  if (c.json) {
    Json arcs = Json::array();
    for (const Arc& a : o) arcs.push_back({a.tail, a.head});
    std::cout << Json{{"orientable", true}, {"arcs", arcs}}.dump(2) << "\n";
  } else {
    std::cout << "orientable\narcs:";
    for (const Arc& a : o) std::cout << " " << a.tail << "->" << a.head;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_gap(int n_min, int n_max, int k, const Common& c) {
  const auto rows = gap_report(n_min, n_max, k);
  if (c.json) {
    std::cout << gap_rows_to_json(rows).dump(2) << "\n";
  } else {
    write_gap_table(std::cout, rows);
  }
  return kOk;
}

int cmd_analyze(const std::string& path, const std::string& strategy, const Common& c) {
  const Instance inst = read_instance(path);
  const Lp2System sys = inst.lp2_system();
  const LpResult lp = solve_with_separation(lp2_base_problem(sys), lp2_separator(sys));
  if (!std::holds_alternative<BasicSolution>(lp)) {
    std::cout << "relaxation is infeasible\n";
    return kInfeasible;
  }
  const BasicSolution& sol = std::get<BasicSolution>(lp);
  const BasisFamily basis = extract_strongly_crossfree_basis(
      sys, sol.values, strategy == "descent" ? BasisStrategy::Descent : BasisStrategy::Greedy);
  const BasisCheck check = check_basis(basis);
  const DominationForest forest = domination_forest(basis.members);
  if (c.json) {
    Json j = basis_to_json(basis, forest);
    j["check"] = {{"tight", check.tight},
                  {"strongly_cross_free", check.strongly_cross_free},
                  {"independent", check.independent},
                  {"full_dimension", check.full_dimension}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "objective " << show(sol.objective, c) << ", " << basis.x.size() << " fractional variables, "
              << basis.stats.tight_rows << " tight rows\n";
    std::cout << "x:";
    for (std::size_t i = 0; i < sol.values.size(); ++i) std::cout << " " << i << ":" << to_string(sol.values[i]);
    std::cout << "\nbasis family:\n";
    for (std::size_t i = 0; i < basis.members.size(); ++i) {
      std::cout << "  [" << i << "] " << basis.members[i].encode() << "  parent ";
      if (forest.parent[i]) {
        std::cout << *forest.parent[i];
      } else {
        std::cout << "-";
      }
      std::cout << "\n";
    }
    std::cout << "tight " << check.tight << ", strongly cross-free " << check.strongly_cross_free
              << ", independent " << check.independent << ", full dimension " << check.full_dimension << "\n";
  }
  return check.ok() ? kOk : kContract;
}

int cmd_gen(std::uint64_t seed, const InstanceParams& p, const std::string& out_path) {
  Rng rng(seed);
  const Instance inst = random_instance(rng, p);
  const Json j = instance_to_json(inst);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_file(out_path, j);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum cost f-orientable subgraph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--decimal", common.decimal, "Also print decimal renderings of rationals");
  app.add_flag("--json", common.json, "Print machine-readable output");

  std::string inst_path, res_path, out_path, lp_path, strategy = "greedy";
  SolveOptions sopts;

  auto* solve_cmd = app.add_subcommand("solve", "Run iterative rounding on an instance");
  solve_cmd->add_option("instance", inst_path)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--out", out_path, "Write the result record here");
  solve_cmd->add_option("--max-violations-per-round", sopts.separation.max_rows, "Rows added per separation round")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--emit-lp", lp_path, "Dump the first-round relaxation in LP format");
  solve_cmd->add_flag("--audit-copartitions", sopts.separation.audit_copartitions,
                      "Scan co-partition rows of (k,l) demands and audit their redundancy");
  solve_cmd->add_flag("--check-basis", sopts.check_basis_each_round,
                      "Extract and verify a strongly cross-free basis in every round");

  auto* certify_cmd = app.add_subcommand("certify", "Re-verify a solve result");
  certify_cmd->add_option("instance", inst_path)->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("result", res_path)->required()->check(CLI::ExistingFile);

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  oracle_cmd->add_option("instance", inst_path)->required()->check(CLI::ExistingFile);

  auto* orient_cmd = app.add_subcommand("orient", "Orient the free edges to cover the demand");
  orient_cmd->add_option("instance", inst_path)->required()->check(CLI::ExistingFile);

  int n_min = 2, n_max = 6, k = 2;
  auto* gap_cmd = app.add_subcommand("gap", "Integrality gap table for the mixed-graph construction");
  gap_cmd->add_option("--n-min", n_min)->check(CLI::Range(2, 10));
  gap_cmd->add_option("--n-max", n_max)->check(CLI::Range(2, 10));
  gap_cmd->add_option("--k", k)->check(CLI::Range(2, 8));

  auto* analyze_cmd = app.add_subcommand("analyze", "Strongly cross-free basis of the first-round vertex");
  analyze_cmd->add_option("instance", inst_path)->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "descent"}));

  std::uint64_t seed = 1;
  std::string demand = "kl11";
  InstanceParams params;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--nodes", params.n)->check(CLI::Range(2, 10));
  gen_cmd->add_option("--free-edges", params.free_edges)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--purchasable", params.purchasable)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--demand", demand)->check(CLI::IsMember({"kl10", "kl11", "kl21", "kl22", "table"}));
  gen_cmd->add_option("--max-cost", params.max_cost)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(inst_path, sopts, out_path, lp_path, common);
    if (*certify_cmd) return cmd_certify(inst_path, res_path, common);
    if (*oracle_cmd) return cmd_oracle(inst_path, common);
    if (*orient_cmd) return cmd_orient(inst_path, common);
    if (*gap_cmd) return cmd_gap(n_min, n_max, k, common);
    if (*analyze_cmd) return cmd_analyze(inst_path, strategy, common);
    if (*gen_cmd) {
      if (demand == "kl10") params.demand = DemandKind::KL10;
      if (demand == "kl11") params.demand = DemandKind::KL11;
      if (demand == "kl21") params.demand = DemandKind::KL21;
      if (demand == "kl22") params.demand = DemandKind::KL22;
      if (demand == "table") params.demand = DemandKind::Table;
      return cmd_gen(seed, params, out_path);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const ContractViolation& e) {
    std::cerr << "internal contract violation: " << e.what() << "\n";
    return kContract;
  }
  return kUsage;
}
