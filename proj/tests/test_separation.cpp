#include "support.hpp"

#include "fos/errors.hpp"
#include "fos/separation.hpp"

#include <doctest.h>

using namespace fos;
using namespace fos::testing;

namespace {

Lp2System system_of(const Instance& inst) { return inst.lp2_system(); }

/// Largest violation over every row, computed from the definitions.
Rat max_violation(const Lp2System& sys, const std::vector<Rat>& x, bool with_copartitions) {
  std::vector<PoCP> rows = enum_partitions(sys.n, sys.n, sys.root);
  if (with_copartitions) {
    const auto cops = enum_copartitions(sys.n, sys.n, sys.root);
    rows.insert(rows.end(), cops.begin(), cops.end());
  }
  const UGraph vg(sys.n, sys.var_edges);
  Rat best = 0;
  for (const PoCP& p : rows) {
    int demand = 0;
    for (NodeSet s : p.parts()) demand += sys.demand.eval(s);
    const int base = static_cast<int>(brute_chi(p.parts(), sys.base).size());
    Rat lhs = 0;
    for (std::size_t i : brute_chi(p.parts(), vg)) lhs += x[i];
    best = std::max(best, Rat(Rat(demand - base) - lhs));
  }
  return best;
}

std::vector<Rat> random_point(Rng& rng, std::size_t m) {
  std::vector<Rat> x;
  for (std::size_t i = 0; i < m; ++i) x.emplace_back(uniform_int(rng, 0, 6), 6);
  for (Rat& v : x) v.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("all-ones point on an orientable instance has no violated row") {
  Lp2System sys;
  sys.n = 4;
  sys.root = 0;
  sys.demand = Demand::kl(4, 1, 1, 0);
  sys.base = UGraph(4, {{0, 1}, {1, 2}, {2, 3}});
  sys.var_edges = {{3, 0}};
  sys.var_cost = {Rat(5)};
  CHECK(separate_lp2(sys, std::vector<Rat>{1}).empty());

  const auto rows = separate_lp2(sys, std::vector<Rat>{0});
  REQUIRE_FALSE(rows.empty());
  // every two-part cut of the path is crossed by one owned edge: rhs 1 + 1 - 1 = 1
  CHECK(rows.front().violation() == 1);
  CHECK(rows.front().lhs == 0);
  for (const Lp2Row& r : rows) {
    CHECK(r.violation() > 0);
    const int p = static_cast<int>(r.family.size());
    CHECK(r.rhs == (p - 1) + 1 - e_count(r.family, sys.base));
  }
}

TEST_CASE("separator agrees with an independent full enumeration") {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    InstanceParams params;
    params.n = uniform_int(rng, 3, 6);
    params.free_edges = uniform_int(rng, 0, 6);
    params.purchasable = uniform_int(rng, 1, 7);
    params.demand = static_cast<DemandKind>(uniform_int(rng, 0, 4));
    const Instance inst = random_instance(rng, params);
    const Lp2System sys = system_of(inst);
    const auto x = random_point(rng, sys.var_edges.size());
    SeparationOptions opts;
    opts.audit_copartitions = true;
    const auto rows = separate_lp2(sys, x, opts);
    const Rat worst = max_violation(sys, x, true);
    CHECK(rows.empty() == (worst == 0));
    if (!rows.empty()) CHECK(rows.front().violation() == worst);
    CHECK(rows.size() <= 5);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].violation() > 0);
      CHECK(rows[i].lhs == lp2_lhs(sys, rows[i].family, x));
      if (i > 0) CHECK(rows[i - 1].violation() >= rows[i].violation());
    }
    // the default mode skips (k,l) co-partitions and must reach the same verdict
    CHECK(separate_lp2(sys, x).empty() == rows.empty());
  }
}

TEST_CASE("max rows option") {
  Lp2System sys;
  sys.n = 5;
  sys.root = 0;
  sys.demand = Demand::kl(5, 2, 1, 0);
  sys.base = UGraph(5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) sys.var_edges.push_back({u, v});
  }
  sys.var_cost.assign(sys.var_edges.size(), 1);
  const std::vector<Rat> zero(sys.var_edges.size(), 0);
  SeparationOptions opts;
  opts.max_rows = 12;
  CHECK(separate_lp2(sys, zero, opts).size() == 12);
  opts.max_rows = 1;
  CHECK(separate_lp2(sys, zero, opts).size() == 1);
}

TEST_CASE("separator cap") {
  Lp2System sys;
  sys.n = 11;
  sys.demand = Demand::kl(11, 1, 1, 0);
  sys.base = UGraph(11);
  CHECK_THROWS_AS(separate_lp2(sys, std::vector<Rat>{}), CapExceeded);
}

TEST_CASE("max-flow precheck for k = l") {
  Lp2System k4;
  k4.n = 4;
  k4.demand = Demand::kl(4, 1, 1, 0);
  k4.base = UGraph(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.var_edges.push_back({u, v});
  }
  k4.var_cost.assign(6, 1);
  CHECK(feasibility_precheck_kl(k4, std::vector<Rat>(6, 1)));

  Lp2System path = k4;
  path.var_edges = {{0, 1}, {1, 2}, {2, 3}};
  path.var_cost.assign(3, 1);
  CHECK_FALSE(feasibility_precheck_kl(path, std::vector<Rat>(3, 1)));

  Rng rng(52);
  int yes = 0;
  for (int trial = 0; trial < 80; ++trial) {
    InstanceParams params;
    params.n = 7;
    params.free_edges = uniform_int(rng, 2, 8);
    params.purchasable = uniform_int(rng, 4, 12);
    params.demand = trial % 4 == 0 ? DemandKind::KL21 : DemandKind::KL11;
    const Instance inst = random_instance(rng, params);
    const Lp2System sys = system_of(inst);
    const auto x = random_point(rng, sys.var_edges.size());
    const bool ok = feasibility_precheck_kl(sys, x);
    CHECK(ok == separate_lp2(sys, x).empty());
    yes += ok ? 1 : 0;
  }
  CHECK(yes > 0);
}
