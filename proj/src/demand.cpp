#include "fos/demand.hpp"

#include "fos/errors.hpp"

#include <algorithm>
#include <string>

namespace fos {

Demand Demand::kl(int n, int k, int l, NodeId r0) {
  if (n < 2 || n > kMaxNodes) throw InputError("demand: node count out of range");
  if (l < 0 || k < l) throw InputError("(k,l) demand requires k >= l >= 0");
  if (r0 < 0 || r0 >= n) throw InputError("(k,l) demand root out of range");
  Demand d;
  d.n_ = n;
  d.is_kl_ = true;
  d.kl_ = {k, l, r0};
  return d;
}

Demand Demand::table(int n, const std::vector<std::pair<NodeSet, int>>& entries) {
  if (n < 2 || n > 20) throw InputError("table demand: node count out of range");
  Demand d;
  d.n_ = n;
  d.table_.assign(std::size_t{1} << n, 0);
  const NodeSet full = NodeSet::full(n);
  for (const auto& [s, value] : entries) {
    if (!s.subset_of(full)) throw InputError("table demand: set " + s.to_string() + " leaves the ground set");
    if (value < 0) throw InputError("table demand: negative value on " + s.to_string());
    if (value > table_value_cap(n)) {
      throw InputError("table demand: value " + std::to_string(value) + " on " + s.to_string() +
                       " exceeds the cap n(n-1) = " + std::to_string(table_value_cap(n)));
    }
    if ((s.empty() || s == full) && value != 0) throw InputError("table demand: f(empty) and f(V) must be 0");
    d.table_[s.bits()] = value;
  }
  return d;
}

std::vector<std::pair<NodeSet, int>> Demand::entries() const {
  std::vector<std::pair<NodeSet, int>> out;
  for (std::size_t b = 0; b < table_.size(); ++b) {
    if (table_[b] != 0) out.emplace_back(NodeSet::from_bits(static_cast<std::uint32_t>(b)), table_[b]);
  }
  return out;
}

int Demand::max_value() const {
  if (is_kl_) return kl_.k;
  return table_.empty() ? 0 : *std::max_element(table_.begin(), table_.end());
}

bool operator==(const Demand& a, const Demand& b) {
  if (a.n_ != b.n_ || a.is_kl_ != b.is_kl_) return false;
  if (a.is_kl_) return a.kl_.k == b.kl_.k && a.kl_.l == b.kl_.l && a.kl_.r0 == b.kl_.r0;
  return a.table_ == b.table_;
}

std::optional<std::pair<NodeSet, NodeSet>> check_crossing_gsupermodular(const Demand& f, const UGraph& g) {
  const int n = f.node_count();
  if (g.node_count() != n) throw InputError("supermodularity check: graph and demand sizes differ");
  require_cap(n <= kSupermodularityCap, "supermodularity check over " + std::to_string(n) + " nodes exceeds the cap of " +
                                            std::to_string(kSupermodularityCap));
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<int> value(count);
  std::vector<int> degree(count);
  for (std::uint32_t b = 0; b < count; ++b) {
    const NodeSet s = NodeSet::from_bits(b);
    value[b] = f.eval(s);
    degree[b] = deg_cut(g, s);
  }
  for (std::uint32_t sb = 1; sb < count; ++sb) {
    for (std::uint32_t tb = sb + 1; tb < count; ++tb) {
      const NodeSet s = NodeSet::from_bits(sb);
      const NodeSet t = NodeSet::from_bits(tb);
      if (!crossing(s, t, n)) continue;
      const std::uint32_t i = sb & tb;
      const std::uint32_t u = sb | tb;
      // d(S)+d(T) = d(S∩T)+d(S∪T)+2 d(S,T)
      const int twice_cross = degree[sb] + degree[tb] - degree[i] - degree[u];
      if (2 * (value[sb] + value[tb]) > 2 * (value[i] + value[u]) + twice_cross) return std::make_pair(s, t);
    }
  }
  return std::nullopt;
}

int partition_demand(const Demand& f, const PoCP& p) {
  int total = 0;
  for (NodeSet s : p.parts()) total += f.eval(s);
  return total;
}

}  // namespace fos
