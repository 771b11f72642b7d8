#include "fos/separation.hpp"

#include "fos/errors.hpp"

#include <algorithm>
#include <string>

namespace fos {

namespace {

bool ranks_before(const Lp2Row& a, const Lp2Row& b) {
  const Rat va = a.violation();
  const Rat vb = b.violation();
  if (va != vb) return va > vb;
  return a.family < b.family;
}

}  // namespace

std::vector<Lp2Row> separate_lp2(const Lp2System& sys, std::span<const Rat> x, const SeparationOptions& opts) {
  require_cap(sys.n <= kSeparationCap, "separation over " + std::to_string(sys.n) + " nodes exceeds the cap of " +
                                           std::to_string(kSeparationCap));
  for (const Rat& v : x) {
    if (v < 0 || v > 1) throw InputError("separation point leaves the unit box");
  }
  const bool skip_co = sys.demand.is_kl() && !opts.audit_copartitions;
  ScanOptions scan;
  scan.include_copartitions = !skip_co;
  scan.filter = RowFilter::Violated;

  std::vector<Lp2Row> best;
  const std::size_t keep = static_cast<std::size_t>(std::max(1, opts.max_rows));
  scan_lp2_rows(sys, x, scan, [&](const Lp2Row& row) {
    if (best.size() == keep && !ranks_before(row, best.back())) return;
    best.insert(std::upper_bound(best.begin(), best.end(), row, ranks_before), row);
    if (best.size() > keep) best.pop_back();
  });

  if (sys.demand.is_kl() && opts.audit_copartitions) {
    // Every co-partition row must be implied by the partition row of the complements
    // (same χ, at least the same right side).
    ScanOptions all;
    all.filter = RowFilter::All;
    scan_lp2_rows(sys, x, all, [&](const Lp2Row& row) {
      if (row.family.is_partition()) return;
      const int partner = lp2_rhs(sys, row.family.complemented());
      require_contract(partner >= row.rhs, "co-partition row " + row.family.encode() +
                                               " is not dominated by its complement partition");
    });
  }
  return best;
}

Separator lp2_separator(const Lp2System& sys, const SeparationOptions& opts) {
  return [sys, opts](std::span<const Rat> x) {
    std::vector<LpRow> rows;
    for (const Lp2Row& r : separate_lp2(sys, x, opts)) rows.push_back(to_lp_row(sys, r.family));
    return rows;
  };
}

bool feasibility_precheck_kl(const Lp2System& sys, std::span<const Rat> x) {
  if (!sys.demand.is_kl()) throw InputError("the max-flow precheck needs a (k,l) demand");
  const KLParams& kl = sys.demand.kl_params();
  if (kl.k != kl.l) return separate_lp2(sys, x).empty();
  std::vector<Arc> arcs;
  std::vector<Rat> cap;
  for (const Edge& e : sys.base.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
    cap.emplace_back(1);
    cap.emplace_back(1);
  }
  for (std::size_t i = 0; i < sys.var_edges.size(); ++i) {
    arcs.push_back({sys.var_edges[i].u, sys.var_edges[i].v});
    arcs.push_back({sys.var_edges[i].v, sys.var_edges[i].u});
    cap.push_back(x[i]);
    cap.push_back(x[i]);
  }
  const Rat need = 2 * kl.k;
  for (NodeId v = 1; v < sys.n; ++v) {
    if (max_flow(sys.n, arcs, cap, 0, v).value < need) return false;
  }
  return true;
}

}  // namespace fos
