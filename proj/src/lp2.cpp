#include "fos/lp2.hpp"

#include "fos/errors.hpp"

#include <cstdint>
#include <limits>

namespace fos {

UGraph Lp2System::var_graph() const { return UGraph(n, var_edges); }

int lp2_rhs(const Lp2System& sys, const PoCP& p) { return partition_demand(sys.demand, p) - e_count(p, sys.base); }

std::vector<std::size_t> lp2_support(const Lp2System& sys, const PoCP& p) {
  const auto lab = p.labels();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sys.var_edges.size(); ++i) {
    if (lab[sys.var_edges[i].u] != lab[sys.var_edges[i].v]) out.push_back(i);
  }
  return out;
}

Rat lp2_lhs(const Lp2System& sys, const PoCP& p, std::span<const Rat> x) {
  Rat total = 0;
  for (std::size_t i : lp2_support(sys, p)) total += x[i];
  return total;
}

std::vector<Rat> lp2_vector(const Lp2System& sys, const PoCP& p) {
  std::vector<Rat> v(sys.var_edges.size(), 0);
  for (std::size_t i : lp2_support(sys, p)) v[i] = 1;
  return v;
}

LpRow to_lp_row(const Lp2System& sys, const PoCP& p) {
  LpRow row;
  for (std::size_t i : lp2_support(sys, p)) row.coeffs.emplace_back(static_cast<int>(i), Rat(1));
  row.sense = Sense::Ge;
  row.rhs = lp2_rhs(sys, p);
  row.key = p.encode();
  return row;
}

LpProblem lp2_base_problem(const Lp2System& sys) {
  if (sys.var_cost.size() != sys.var_edges.size()) throw InputError("LP2: one cost per variable edge required");
  LpProblem lp;
  for (std::size_t i = 0; i < sys.var_edges.size(); ++i) {
    const Edge& e = sys.var_edges[i];
    lp.add_var("x" + std::to_string(i) + "_" + std::to_string(e.u) + "_" + std::to_string(e.v), 0, 1, sys.var_cost[i]);
  }
  return lp;
}

LpProblem materialize_lp2(const Lp2System& sys, bool include_copartitions) {
  LpProblem lp = lp2_base_problem(sys);
  const std::vector<Rat> zero(sys.var_edges.size(), 0);
  ScanOptions opts;
  opts.include_copartitions = include_copartitions;
  scan_lp2_rows(sys, zero, opts, [&](const Lp2Row& r) {
    if (r.rhs > 0) lp.add_row(to_lp_row(sys, r.family));
  });
  return lp;
}

namespace {

template <class W>
void scan_impl(const Lp2System& sys, const std::vector<W>& weight, const W& scale, const ScanOptions& opts,
               std::span<const Rat> x, const std::function<void(const Lp2Row&)>& fn) {
  const int n = sys.n;
  const auto& base = sys.base.edges();
  const auto& vars = sys.var_edges;
  std::vector<NodeSet> buffer;

  auto passes = [&](const W& lhs, int rhs) {
    switch (opts.filter) {
      case RowFilter::All:
        return true;
      case RowFilter::Violated:
        return lhs < W(rhs) * scale;
      case RowFilter::Tight:
        return lhs == W(rhs) * scale;
    }
    return false;
  };
  auto lhs_of = [&](const std::vector<int>& lab) {
    Rat total = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (lab[vars[i].u] != lab[vars[i].v]) total += x[i];
    }
    return total;
  };
  std::vector<int> lab(n);

  for_each_set_partition(
      n, 2, n,
      [&](const PartitionView& view) {
        int e_base = 0;
        for (const Edge& e : base) e_base += view.labels[e.u] != view.labels[e.v] ? 1 : 0;
        W lhs = W(0);
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (view.labels[vars[i].u] != view.labels[vars[i].v]) lhs += weight[i];
        }
        int fp = 0;
        for (NodeSet s : view.parts) fp += sys.demand.eval(s);
        const int rhs_p = fp - e_base;
        if (passes(lhs, rhs_p)) {
          buffer.assign(view.parts.begin(), view.parts.end());
          lab.assign(view.labels.begin(), view.labels.end());
          fn(Lp2Row{PoCP::partition(n, sys.root, buffer), lhs_of(lab), rhs_p});
        }
        if (opts.include_copartitions && view.parts.size() >= 3) {
          int fc = 0;
          for (NodeSet s : view.parts) fc += sys.demand.eval(s.complement(n));
          const int rhs_c = fc - e_base;
          if (passes(lhs, rhs_c)) {
            buffer.clear();
            for (NodeSet s : view.parts) buffer.push_back(s.complement(n));
            lab.assign(view.labels.begin(), view.labels.end());
            fn(Lp2Row{PoCP::copartition(n, sys.root, buffer), lhs_of(lab), rhs_c});
          }
        }
        return true;
      },
      opts.cap);
}

}  // namespace

void scan_lp2_rows(const Lp2System& sys, std::span<const Rat> x, const ScanOptions& opts,
                   const std::function<void(const Lp2Row&)>& fn) {
  if (x.size() != sys.var_edges.size()) throw InputError("LP2 scan: point has the wrong dimension");
  // Integer arithmetic on x scaled by its common denominator when it fits.
  const mpz_class den = common_denominator(x);
  const long long limit = std::numeric_limits<std::int64_t>::max() / (4 * (static_cast<long long>(x.size()) + 1)) /
                          (static_cast<long long>(sys.n) * sys.n * sys.n + 1);
  if (den.fits_slong_p() && den.get_si() <= limit) {
    std::vector<std::int64_t> w;
    for (const Rat& v : x) {
      const mpz_class scaled = v.get_num() * (den / v.get_den());
      w.push_back(scaled.get_si());
    }
    scan_impl<std::int64_t>(sys, w, den.get_si(), opts, x, fn);
  } else {
    std::vector<Rat> w(x.begin(), x.end());
    scan_impl<Rat>(sys, w, Rat(1), opts, x, fn);
  }
}

std::vector<Lp2Row> tight_rows(const Lp2System& sys, std::span<const Rat> x) {
  std::vector<Lp2Row> out;
  ScanOptions opts;
  opts.filter = RowFilter::Tight;
  scan_lp2_rows(sys, x, opts, [&](const Lp2Row& r) {
    if (!lp2_support(sys, r.family).empty()) out.push_back(r);
  });
  return out;
}

}  // namespace fos
