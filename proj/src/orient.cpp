#include "fos/orient.hpp"

#include "fos/errors.hpp"
#include "fos/exactlp.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace fos {

OrientabilityVerdict is_f_orientable(const UGraph& g, const Demand& f, const OrientabilityOptions& opts) {
  const int n = g.node_count();
  if (f.node_count() != n) throw InputError("orientability: graph and demand sizes differ");
  OrientabilityVerdict verdict{true, std::nullopt};
  for_each_set_partition(
      n, 2, n,
      [&](const PartitionView& view) {
        int e = 0;
        for (const Edge& edge : g.edges()) e += view.labels[edge.u] != view.labels[edge.v] ? 1 : 0;
        int fp = 0;
        for (NodeSet s : view.parts) fp += f.eval(s);
        if (e < fp) {
          verdict = {false, PoCP::partition(n, opts.root, {view.parts.begin(), view.parts.end()})};
          return false;
        }
        if (!opts.partitions_only && view.parts.size() >= 3) {
          int fc = 0;
          std::vector<NodeSet> comp;
          for (NodeSet s : view.parts) {
            comp.push_back(s.complement(n));
            fc += f.eval(comp.back());
          }
          if (e < fc) {
            verdict = {false, PoCP::copartition(n, opts.root, std::move(comp))};
            return false;
          }
        }
        return true;
      },
      opts.cap);
  return verdict;
}

namespace {

LpRow in_cut_row(std::span<const Arc> arcs, NodeSet s, int demand) {
  LpRow row;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    if (enters(arcs[j], s)) row.coeffs.emplace_back(static_cast<int>(j), Rat(1));
  }
  row.sense = Sense::Ge;
  row.rhs = demand;
  row.key = "cut" + std::to_string(s.bits());
  return row;
}

}  // namespace

Orientation extract_orientation(const UGraph& g, const Demand& f) {
  const int n = g.node_count();
  if (f.node_count() != n) throw InputError("orientation: graph and demand sizes differ");
  const std::vector<Arc> arcs = bidirect(g);

  LpProblem lp;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    lp.add_var("y" + std::to_string(arcs[j].tail) + "_" + std::to_string(arcs[j].head) + "_" + std::to_string(j / 2), 0,
               1, 0);
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    LpRow row;
    row.coeffs = {{static_cast<int>(2 * i), Rat(1)}, {static_cast<int>(2 * i + 1), Rat(1)}};
    row.sense = Sense::Eq;
    row.rhs = 1;
    row.key = "edge" + std::to_string(i);
    lp.add_row(std::move(row));
  }

  Separator sep;
  if (f.is_kl()) {
    const KLParams kl = f.kl_params();
    sep = [&, kl](std::span<const Rat> y) {
      std::vector<LpRow> rows;
      for (NodeId v = 0; v < n; ++v) {
        if (v == kl.r0) continue;
        auto out = max_flow(n, arcs, y, kl.r0, v);
        if (out.value < kl.k) rows.push_back(in_cut_row(arcs, out.source_side.complement(n), kl.k));
        auto back = max_flow(n, arcs, y, v, kl.r0);
        if (back.value < kl.l) rows.push_back(in_cut_row(arcs, back.source_side.complement(n), kl.l));
      }
      return rows;
    };
  } else {
    require_cap(n <= kCutEnumerationCap, "cut enumeration over " + std::to_string(n) + " nodes exceeds the cap");
    sep = [&](std::span<const Rat> y) {
      std::vector<std::pair<Rat, NodeSet>> violated;
      for (std::uint32_t b = 1; b + 1 < (std::uint32_t{1} << n); ++b) {
        const NodeSet s = NodeSet::from_bits(b);
        const int need = f.eval(s);
        if (need <= 0) continue;
        const Rat have = in_cut(arcs, y, s);
        if (have < need) violated.emplace_back(Rat(need) - have, s);
      }
      std::stable_sort(violated.begin(), violated.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      if (violated.size() > 10) violated.resize(10);
      std::vector<LpRow> rows;
      for (const auto& [gap, s] : violated) rows.push_back(in_cut_row(arcs, s, f.eval(s)));
      return rows;
    };
  }

  const LpResult res = solve_with_separation(lp, sep);
  if (std::holds_alternative<Infeasible>(res)) throw InputError("graph is not f-orientable");
  const auto& y = std::get<BasicSolution>(res).values;
  Orientation o;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    require_contract(is_integral(y[2 * i]) && is_integral(y[2 * i + 1]),
                     "orientation LP returned a fractional vertex at edge " + std::to_string(i));
    o.push_back(y[2 * i] == 1 ? arcs[2 * i] : arcs[2 * i + 1]);
  }
  require_contract(verify_covers(o, g, f), "extracted orientation does not cover the demand");
  return o;
}

bool verify_covers(const Orientation& o, const UGraph& g, const Demand& f) {
  const int n = g.node_count();
  if (o.size() != g.edge_count()) return false;
  for (std::size_t i = 0; i < o.size(); ++i) {
    const Edge& e = g.edge(i);
    const bool same = (o[i].tail == e.u && o[i].head == e.v) || (o[i].tail == e.v && o[i].head == e.u);
    if (!same) return false;
  }
  if (f.is_kl()) {
    const KLParams kl = f.kl_params();
    const std::vector<std::int64_t> cap(o.size(), 1);
    for (NodeId v = 0; v < n; ++v) {
      if (v == kl.r0) continue;
      if (max_flow(n, o, cap, kl.r0, v).value < kl.k) return false;
      if (max_flow(n, o, cap, v, kl.r0).value < kl.l) return false;
    }
    return true;
  }
  require_cap(n <= kCutEnumerationCap, "cut enumeration over " + std::to_string(n) + " nodes exceeds the cap");
  for (std::uint32_t b = 1; b + 1 < (std::uint32_t{1} << n); ++b) {
    const NodeSet s = NodeSet::from_bits(b);
    const int need = f.eval(s);
    if (need > 0 && in_degree(o, s) < need) return false;
  }
  return true;
}

}  // namespace fos
