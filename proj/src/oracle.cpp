#include "fos/oracle.hpp"

#include "fos/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace fos {

namespace {

struct DeficitRow {
  std::uint32_t mask;  // purchasable edges in χ(𝒫)
  int deficit;         // Σ f(S) − e_E(𝒫) > 0
};

std::vector<DeficitRow> deficit_rows(const Instance& inst) {
  const int n = inst.n;
  std::map<std::uint32_t, int> rows;
  auto record = [&](const std::vector<int>& lab, int demand, int e_free) {
    const int deficit = demand - e_free;
    if (deficit <= 0) return;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < inst.purchasable.size(); ++i) {
      if (lab[inst.purchasable[i].u] != lab[inst.purchasable[i].v]) mask |= std::uint32_t{1} << i;
    }
    int& slot = rows[mask];
    slot = std::max(slot, deficit);
  };
  std::vector<int> lab(n);
  for_each_set_partition(n, 2, n, [&](const PartitionView& view) {
    lab.assign(view.labels.begin(), view.labels.end());
    int e = 0;
    for (const Edge& edge : inst.free_edges) e += lab[edge.u] != lab[edge.v] ? 1 : 0;
    int fp = 0;
    for (NodeSet s : view.parts) fp += inst.demand.eval(s);
    record(lab, fp, e);
    if (view.parts.size() >= 3) {
      int fc = 0;
      for (NodeSet s : view.parts) fc += inst.demand.eval(s.complement(n));
      record(lab, fc, e);
    }
    return true;
  });
  std::vector<DeficitRow> out;
  for (const auto& [mask, d] : rows) out.push_back({mask, d});
  return out;
}

}  // namespace

std::optional<ExactOpt> exact_opt(const Instance& inst, const std::optional<Rat>& lower_bound) {
  inst.validate();
  require_cap(inst.n <= kOracleNodeCap, "oracle: " + std::to_string(inst.n) + " nodes exceeds the cap of " +
                                            std::to_string(kOracleNodeCap));
  const std::size_t m = inst.purchasable.size();
  require_cap(m <= static_cast<std::size_t>(kOracleEdgeCap), "oracle: " + std::to_string(m) +
                                                                 " purchasable edges exceeds the cap of " +
                                                                 std::to_string(kOracleEdgeCap));

  const mpz_class den = common_denominator(inst.cost);
  std::vector<std::int64_t> scaled;
  mpz_class total = 0;
  for (const Rat& c : inst.cost) {
    const mpz_class s = c.get_num() * (den / c.get_den());
    total += s;
    scaled.push_back(s.fits_slong_p() ? s.get_si() : 0);
  }
  require_cap(total.fits_slong_p(), "oracle: scaled costs overflow 64-bit integers");

  std::vector<DeficitRow> rows = deficit_rows(inst);
  const std::uint32_t count = std::uint32_t{1} << m;
  std::vector<std::pair<std::int64_t, std::uint32_t>> subsets;
  subsets.reserve(count);
  for (std::uint32_t s = 0; s < count; ++s) {
    std::int64_t c = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) c += scaled[std::countr_zero(rest)];
    subsets.emplace_back(c, s);
  }
  std::sort(subsets.begin(), subsets.end());

  auto feasible = [&](std::uint32_t s) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (std::popcount(s & rows[i].mask) < rows[i].deficit) {
        // recently failing rows are tried first
        std::rotate(rows.begin(), rows.begin() + static_cast<long>(i), rows.begin() + static_cast<long>(i) + 1);
        return false;
      }
    }
    return true;
  };

  for (const auto& [c, s] : subsets) {
    const Rat cost(mpz_class(static_cast<long>(c)), den);
    if (lower_bound && cost < *lower_bound) continue;
    if (!feasible(s)) continue;
    ExactOpt opt;
    opt.cost = cost;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) opt.chosen.push_back(std::countr_zero(rest));
    return opt;
  }
  return std::nullopt;
}

std::optional<Orientation> exact_orientation_search(const UGraph& g, const Demand& f) {
  const int n = g.node_count();
  const std::size_t m = g.edge_count();
  require_cap(m <= static_cast<std::size_t>(kOracleEdgeCap), "orientation search over " + std::to_string(m) +
                                                                 " edges exceeds the cap of " +
                                                                 std::to_string(kOracleEdgeCap));
  require_cap(n <= 16, "orientation search over " + std::to_string(n) + " nodes exceeds the cap of 16");
  const std::uint32_t sets = std::uint32_t{1} << n;

  Orientation o;
  for (const Edge& e : g.edges()) o.push_back({e.u, e.v});
  std::vector<int> need(sets), indeg(sets, 0);
  int short_sets = 0;
  for (std::uint32_t b = 0; b < sets; ++b) {
    const NodeSet s = NodeSet::from_bits(b);
    need[b] = f.eval(s);
    indeg[b] = in_degree(o, s);
    if (indeg[b] < need[b]) ++short_sets;
  }
  if (short_sets == 0) return o;

  for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
    const int e = std::countr_zero(step);
    const Arc old = o[e];
    o[e] = {old.head, old.tail};
    // sets entered by the old arc lose one, sets entered by the new arc gain one
    const std::uint32_t head_bit = std::uint32_t{1} << old.head;
    const std::uint32_t tail_bit = std::uint32_t{1} << old.tail;
    for (std::uint32_t b = 0; b < sets; ++b) {
      const bool has_head = b & head_bit;
      const bool has_tail = b & tail_bit;
      if (has_head == has_tail) continue;
      const bool was_short = indeg[b] < need[b];
      indeg[b] += has_head ? -1 : 1;
      const bool is_short = indeg[b] < need[b];
      short_sets += static_cast<int>(is_short) - static_cast<int>(was_short);
    }
    if (short_sets == 0) return o;
  }
  return std::nullopt;
}

}  // namespace fos
