#include "fos/gaplab.hpp"

#include "fos/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>

namespace fos {

GapInstance build_gap_instance(int n, int k) {
  if (n < 2) throw InputError("gap instance needs n >= 2");
  if (k < 2) throw InputError("gap instance needs k >= 2");
  require_cap(2 * n <= 20, "gap instance with n = " + std::to_string(n) + " exceeds the cap of n <= 10");
  GapInstance gi;
  gi.n = n;
  gi.k = k;
  gi.mixed.n = 2 * n;
  auto& arcs = gi.mixed.arcs;
  for (int i = 1; i <= n; ++i) arcs.push_back({gi.u(i), gi.v(i)});
  for (int i = 1; i < n; ++i) arcs.push_back({gi.u(i), gi.v(i + 1)});
  gi.ag_count = arcs.size();
  for (std::size_t j = 0; j < gi.ag_count; ++j) {
    const Arc a = arcs[j];
    arcs.push_back({a.head, a.tail});
    arcs.push_back({a.head, a.tail});
  }
  gi.ab_count = 2 * gi.ag_count;
  for (int c = 0; c < k - 2; ++c) {
    for (int i = 1; i < n; ++i) arcs.push_back({gi.u(i), gi.u(i + 1)});
    arcs.push_back({gi.u(n), gi.v(n)});
    for (int i = n; i > 1; --i) arcs.push_back({gi.v(i), gi.v(i - 1)});
    arcs.push_back({gi.v(1), gi.u(1)});
  }
  gi.cycle_arc_count = arcs.size() - gi.ag_count - gi.ab_count;
  for (int i = 1; i < n; ++i) gi.mixed.uedges.push_back({gi.u(i), gi.u(i + 1)});
  for (int i = 1; i < n; ++i) gi.mixed.uedges.push_back({gi.v(i), gi.v(i + 1)});
  gi.extra = {gi.u(n), gi.v(1)};
  return gi;
}

std::vector<NodeSet> fundamental_cuts(const GapInstance& gi) {
  std::vector<NodeSet> cuts;
  for (int i = 1; i <= gi.n; ++i) {
    NodeSet s;
    for (int j = 1; j < i; ++j) s.insert(gi.u(j));
    for (int j = 1; j <= i; ++j) s.insert(gi.v(j));
    cuts.push_back(s);
  }
  for (int i = 1; i < gi.n; ++i) {
    NodeSet t;
    for (int j = i + 1; j <= gi.n; ++j) {
      t.insert(gi.u(j));
      t.insert(gi.v(j));
    }
    cuts.push_back(t);
  }
  return cuts;
}

namespace {

LpRow cut_row(const Lp3& l3, NodeSet z, int rhs) {
  LpRow row;
  for (std::size_t j = 0; j < l3.directions.size(); ++j) {
    if (enters(l3.directions[j], z)) row.coeffs.emplace_back(static_cast<int>(j), Rat(1));
  }
  row.sense = Sense::Ge;
  row.rhs = rhs;
  row.key = "Z" + std::to_string(z.bits());
  return row;
}

}  // namespace

Lp3 lp3_build(const GapInstance& gi, bool materialize) {
  const int nodes = gi.node_count();
  if (materialize) require_cap(nodes <= 14, "full materialization needs 2n <= 14");
  Lp3 l3;
  const auto& edges = gi.mixed.uedges;
  for (const Edge& e : edges) {
    l3.directions.push_back({e.u, e.v});
    l3.directions.push_back({e.v, e.u});
  }
  l3.directions.push_back({gi.extra.u, gi.extra.v});
  l3.directions.push_back({gi.extra.v, gi.extra.u});
  for (const Arc& a : l3.directions) {
    l3.lp.add_var("y" + std::to_string(a.tail) + "_" + std::to_string(a.head), 0, 1, 0);
  }
  l3.x_var = l3.lp.add_var("x_extra", 0, 1, gi.extra_cost);
  const int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i) {
    LpRow row;
    row.coeffs = {{2 * i, Rat(1)}, {2 * i + 1, Rat(1)}};
    row.sense = Sense::Eq;
    row.rhs = 1;
    row.key = "edge" + std::to_string(i);
    l3.lp.add_row(std::move(row));
  }
  LpRow link;
  link.coeffs = {{2 * m, Rat(1)}, {2 * m + 1, Rat(1)}, {l3.x_var, Rat(-1)}};
  link.sense = Sense::Eq;
  link.rhs = 0;
  link.key = "extra";
  l3.lp.add_row(std::move(link));
  if (materialize) {
    for (std::uint32_t b = 1; b + 1 < (std::uint32_t{1} << nodes); ++b) {
      const NodeSet z = NodeSet::from_bits(b);
      l3.lp.add_row(cut_row(l3, z, gi.k - in_degree(gi.mixed.arcs, z)));
    }
  }
  return l3;
}

Separator lp3_separator(const GapInstance& gi, const Lp3& l3) {
  std::vector<int> rhs(std::size_t{1} << gi.node_count());
  for (std::uint32_t b = 0; b < rhs.size(); ++b) rhs[b] = gi.k - in_degree(gi.mixed.arcs, NodeSet::from_bits(b));
  return [l3, rhs](std::span<const Rat> y) {
    std::vector<std::pair<Rat, NodeSet>> violated;
    for (std::uint32_t b = 1; b + 1 < rhs.size(); ++b) {
      const NodeSet z = NodeSet::from_bits(b);
      Rat have = 0;
      for (std::size_t j = 0; j < l3.directions.size(); ++j) {
        if (enters(l3.directions[j], z)) have += y[j];
      }
      if (have < rhs[b]) violated.emplace_back(Rat(rhs[b]) - have, z);
    }
    std::stable_sort(violated.begin(), violated.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    if (violated.size() > 10) violated.resize(10);
    std::vector<LpRow> rows;
    for (const auto& [gap, z] : violated) rows.push_back(cut_row(l3, z, rhs[z.bits()]));
    return rows;
  };
}

Rat lp3_value(const GapInstance& gi) {
  const Lp3 l3 = lp3_build(gi, false);
  const LpResult res = solve_with_separation(l3.lp, lp3_separator(gi, l3));
  require_contract(std::holds_alternative<BasicSolution>(res), "gap relaxation is infeasible");
  return std::get<BasicSolution>(res).objective;
}

std::vector<Rat> closed_form_fractional_point(const GapInstance& gi) {
  if (gi.k != 2) throw InputError("the closed-form fractional point is stated for k = 2");
  const int n = gi.n;
  const int m = 2 * (n - 1);
  std::vector<Rat> y(2 * m + 3, 0);
  for (int i = 1; i < n; ++i) {
    const int ue = i - 1;
    const int ve = (n - 1) + (i - 1);
    y[2 * ue] = 1 - make_rat(i, n);
    y[2 * ue + 1] = make_rat(i, n);
    y[2 * ve] = make_rat(i, n);
    y[2 * ve + 1] = 1 - make_rat(i, n);
  }
  y[2 * m] = Rat(1, n);
  y[2 * m + 1] = 0;
  y[2 * m + 2] = Rat(1, n);
  return y;
}

bool lp3_feasible(const GapInstance& gi, const Lp3& l3, std::span<const Rat> point) {
  if (!is_feasible(l3.lp, point)) return false;
  return lp3_separator(gi, l3)(point).empty();
}

std::optional<Rat> integral_optimum(const GapInstance& gi) {
  require_cap(gi.n <= 8, "integral brute force needs n <= 8");
  const int nodes = gi.node_count();
  const auto& edges = gi.mixed.uedges;
  const std::size_t m = edges.size();
  for (int choice = 0; choice < 3; ++choice) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      std::vector<Arc> arcs = gi.mixed.arcs;
      for (std::size_t i = 0; i < m; ++i) {
        arcs.push_back((mask >> i) & 1u ? Arc{edges[i].v, edges[i].u} : Arc{edges[i].u, edges[i].v});
      }
      if (choice == 1) arcs.push_back({gi.extra.u, gi.extra.v});
      if (choice == 2) arcs.push_back({gi.extra.v, gi.extra.u});
      if (arc_connectivity(nodes, arcs) >= gi.k) return choice == 0 ? Rat(0) : gi.extra_cost;
    }
  }
  return std::nullopt;
}

CutCounts fundamental_cut_counts(const GapInstance& gi) {
  require_cap(gi.n <= 8, "cut counting needs n <= 8");
  const auto cuts = fundamental_cuts(gi);
  CutCounts c;
  c.demand = gi.k * static_cast<int>(cuts.size());
  int from_a = 0;
  for (NodeSet z : cuts) from_a += in_degree(gi.mixed.arcs, z);
  const auto& edges = gi.mixed.uedges;
  std::optional<int> from_e;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << edges.size()); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      arcs.push_back((mask >> i) & 1u ? Arc{edges[i].v, edges[i].u} : Arc{edges[i].u, edges[i].v});
    }
    int total = 0;
    for (NodeSet z : cuts) total += in_degree(arcs, z);
    require_contract(!from_e || *from_e == total, "free-edge supply depends on the orientation");
    from_e = total;
  }
  c.supply = from_a + from_e.value_or(0);
  return c;
}

std::vector<Arc> cost_one_solution(const GapInstance& gi) {
  std::vector<Arc> arcs = gi.mixed.arcs;
  for (const Edge& e : gi.mixed.uedges) arcs.push_back({e.u, e.v});
  arcs.push_back({gi.extra.u, gi.extra.v});
  return arcs;
}

Lp1Reencoding lp1_reencoding(const GapInstance& gi) {
  const int nodes = gi.node_count();
  Lp1Reencoding out;
  std::vector<Arc> dirs;
  // A's arcs as free edges, then the rails, then the extra edge.
  for (const Arc& a : gi.mixed.arcs) {
    dirs.push_back(a);
    dirs.push_back({a.head, a.tail});
    out.point.emplace_back(1);
    out.point.emplace_back(0);
  }
  const auto frac = closed_form_fractional_point(gi);
  for (const Edge& e : gi.mixed.uedges) {
    dirs.push_back({e.u, e.v});
    dirs.push_back({e.v, e.u});
  }
  dirs.push_back({gi.extra.u, gi.extra.v});
  dirs.push_back({gi.extra.v, gi.extra.u});
  out.point.insert(out.point.end(), frac.begin(), frac.end());

  for (const Arc& a : dirs) out.lp.add_var("y" + std::to_string(a.tail) + "_" + std::to_string(a.head), 0, 1, 0);
  const int x = out.lp.add_var("x_extra", 0, 1, gi.extra_cost);
  const int pairs = static_cast<int>(dirs.size() / 2);
  for (int i = 0; i < pairs; ++i) {
    LpRow row;
    row.coeffs = {{2 * i, Rat(1)}, {2 * i + 1, Rat(1)}};
    row.sense = Sense::Eq;
    row.rhs = 0;
    row.key = "edge" + std::to_string(i);
    if (i + 1 == pairs) {
      row.coeffs.emplace_back(x, Rat(-1));
    } else {
      row.rhs = 1;
    }
    out.lp.add_row(std::move(row));
  }

  const bool small = gi.n <= 4;
  bool cuts_ok = true;
  for (std::uint32_t b = 1; b + 1 < (std::uint32_t{1} << nodes); ++b) {
    const NodeSet z = NodeSet::from_bits(b);
    LpRow row;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if (enters(dirs[j], z)) row.coeffs.emplace_back(static_cast<int>(j), Rat(1));
    }
    row.sense = Sense::Ge;
    row.rhs = gi.k;
    row.key = "Z" + std::to_string(b);
    if (!row.satisfied_by(out.point)) cuts_ok = false;
    if (small) out.lp.add_row(std::move(row));
  }
  out.feasible = cuts_ok && is_feasible(LpProblem{out.lp.vars, {}}, out.point);
  for (const LpRow& r : out.lp.rows) {
    if (r.sense == Sense::Eq && !r.satisfied_by(out.point)) out.feasible = false;
  }
  if (small) out.vertex = out.feasible && is_vertex(out.lp, out.point);
  out.max_fractional_x = out.point[x];
  return out;
}

std::vector<GapRow> gap_report(int n_min, int n_max, int k) {
  if (n_min < 2 || n_max < n_min) throw InputError("gap report needs 2 <= n_min <= n_max");
  std::vector<GapRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const GapInstance gi = build_gap_instance(n, k);
    GapRow r;
    r.n = n;
    r.k = k;
    r.lp_value = lp3_value(gi);
    const auto opt = integral_optimum(gi);
    require_contract(opt.has_value(), "gap instance has no integral solution");
    r.integral_value = *opt;
    require_contract(r.lp_value > 0, "gap relaxation has value 0");
    r.ratio = r.integral_value / r.lp_value;
    rows.push_back(r);
  }
  return rows;
}

void write_gap_table(std::ostream& out, const std::vector<GapRow>& rows) {
  out << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(10) << "lp3" << std::setw(10)
      << "integral" << "ratio\n";
  for (const GapRow& r : rows) {
    out << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(10) << to_string(r.lp_value) << std::setw(10)
        << to_string(r.integral_value) << to_string(r.ratio) << "\n";
  }
}

}  // namespace fos
