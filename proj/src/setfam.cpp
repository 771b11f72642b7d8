#include "fos/setfam.hpp"

#include "fos/errors.hpp"

#include <algorithm>
#include <string>

namespace fos {

namespace {

void check_ground(int n, NodeId root) {
  if (n < 2 || n > kMaxNodes) throw InputError("ground set size out of range: " + std::to_string(n));
  if (root < 0 || root >= n) throw InputError("root out of range: " + std::to_string(root));
}

std::vector<int> coverage(int n, std::span<const NodeSet> parts) {
  std::vector<int> cov(n, 0);
  for (NodeSet s : parts) {
    for (NodeId v : s.members()) {
      if (v >= n) throw InputError("part " + s.to_string() + " leaves the ground set");
      ++cov[v];
    }
  }
  return cov;
}

// Moves the part selected by `is_first` to the front and sorts the rest.
void canonical_order(std::vector<NodeSet>& parts, auto is_first) {
  auto it = std::find_if(parts.begin(), parts.end(), is_first);
  std::iter_swap(parts.begin(), it);
  std::sort(parts.begin() + 1, parts.end());
}

}  // namespace

PoCP PoCP::partition(int n, NodeId root, std::vector<NodeSet> parts) {
  check_ground(n, root);
  if (parts.size() < 2) throw InputError("a partition needs at least two parts");
  for (NodeSet s : parts) {
    if (s.empty()) throw InputError("partition has an empty part");
  }
  for (int c : coverage(n, parts)) {
    if (c != 1) throw InputError("sets do not form a partition");
  }
  canonical_order(parts, [root](NodeSet s) { return s.contains(root); });
  return PoCP(FamilyKind::Partition, n, root, std::move(parts));
}

PoCP PoCP::copartition(int n, NodeId root, std::vector<NodeSet> parts) {
  check_ground(n, root);
  if (parts.size() < 2) throw InputError("a co-partition needs at least two parts");
  const int want = static_cast<int>(parts.size()) - 1;
  for (int c : coverage(n, parts)) {
    if (c != want) throw InputError("sets do not form a co-partition");
  }
  for (NodeSet s : parts) {
    if (s == NodeSet::full(n)) throw InputError("co-partition part equals the ground set");
  }
  if (parts.size() == 2) return partition(n, root, std::move(parts));
  canonical_order(parts, [root](NodeSet s) { return !s.contains(root); });
  return PoCP(FamilyKind::CoPartition, n, root, std::move(parts));
}

PoCP PoCP::from_sets(int n, NodeId root, std::vector<NodeSet> parts) {
  check_ground(n, root);
  auto cov = coverage(n, parts);
  const int k = static_cast<int>(parts.size());
  if (std::all_of(cov.begin(), cov.end(), [](int c) { return c == 1; })) return partition(n, root, std::move(parts));
  if (std::all_of(cov.begin(), cov.end(), [k](int c) { return c == k - 1; })) {
    return copartition(n, root, std::move(parts));
  }
  throw InputError("sets form neither a partition nor a co-partition");
}

PoCP PoCP::complemented() const {
  std::vector<NodeSet> comp;
  comp.reserve(parts_.size());
  for (NodeSet s : parts_) comp.push_back(s.complement(n_));
  if (kind_ == FamilyKind::Partition) return copartition(n_, root_, std::move(comp));
  return partition(n_, root_, std::move(comp));
}

std::vector<int> PoCP::labels() const {
  std::vector<int> lab(n_, -1);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const NodeSet s = kind_ == FamilyKind::Partition ? parts_[i] : parts_[i].complement(n_);
    for (NodeId v : s.members()) lab[v] = static_cast<int>(i);
  }
  return lab;
}

std::string PoCP::encode() const {
  std::string out = kind_ == FamilyKind::Partition ? "P" : "C";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += "|";
    out += parts_[i].to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const PoCP& a, const PoCP& b) {
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
}

NodeSet SubPartition::support() const {
  NodeSet s;
  for (NodeSet p : parts) s = s | p;
  return s;
}

std::vector<std::size_t> chi(const PoCP& p, const UGraph& g) {
  const auto lab = p.labels();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (lab[g.edge(i).u] != lab[g.edge(i).v]) out.push_back(i);
  }
  return out;
}

int e_count(const PoCP& p, const UGraph& g) { return static_cast<int>(chi(p, g).size()); }

SubPartition tilde(const PoCP& p) {
  SubPartition out;
  for (std::size_t i = 1; i < p.parts().size(); ++i) {
    out.parts.push_back(p.is_partition() ? p.parts()[i] : p.parts()[i].complement(p.node_count()));
  }
  return out;
}

Domination dominates(const SubPartition& q, const SubPartition& p) {
  const NodeSet supp = p.support();
  for (NodeSet big : q.parts) {
    if (supp.subset_of(big)) return Domination::StronglyDominates;
  }
  for (NodeSet small : p.parts) {
    const bool inside = std::any_of(q.parts.begin(), q.parts.end(), [small](NodeSet big) { return small.subset_of(big); });
    if (!inside) return Domination::None;
  }
  return Domination::Dominates;
}

bool disjoint(const SubPartition& a, const SubPartition& b) { return !a.support().intersects(b.support()); }

bool cross_free(const PoCP& p, const PoCP& q) {
  const int n = p.node_count();
  for (NodeSet a : p.parts()) {
    for (NodeSet b : q.parts()) {
      if (crossing(a, b, n)) return false;
    }
  }
  return true;
}

bool strongly_cross_free(const PoCP& p, const PoCP& q) {
  if (p.node_count() != q.node_count() || p.root() != q.root()) {
    throw InputError("strongly_cross_free: families over different ground sets or roots");
  }
  if (!cross_free(p, q)) return false;
  const SubPartition tp = tilde(p);
  const SubPartition tq = tilde(q);
  if (disjoint(tp, tq)) return true;
  const Domination pq = dominates(tp, tq);
  const Domination qp = dominates(tq, tp);
  if (p.kind() == q.kind()) return pq != Domination::None || qp != Domination::None;
  return pq == Domination::StronglyDominates || qp == Domination::StronglyDominates;
}

bool weakly_cross_free(const PoCP& p, const PoCP& q) { return cross_free(p, q) && !strongly_cross_free(p, q); }

bool mixed_strongly_cross_free(const PoCP& partition, const PoCP& copartition) {
  if (!partition.is_partition() || copartition.is_partition()) {
    throw InputError("mixed_strongly_cross_free expects a partition and a co-partition");
  }
  for (NodeSet big : partition.parts()) {
    for (NodeSet small : copartition.parts()) {
      if (small.subset_of(big)) return true;
    }
  }
  return false;
}

int crossing_pairs(std::span<const NodeSet> f, std::span<const NodeSet> h, int n) {
  int count = 0;
  for (NodeSet a : f) {
    for (NodeSet b : h) count += crossing(a, b, n) ? 1 : 0;
  }
  return count;
}

namespace {

struct RgsWalker {
  int n;
  int min_parts;
  int max_parts;
  const std::function<bool(const PartitionView&)>& fn;
  std::vector<int> labels;
  std::vector<NodeSet> parts;
  bool stopped = false;

  void walk(int i, int used) {
    if (stopped) return;
    if (i == n) {
      if (used >= min_parts) {
        PartitionView view{labels, std::span<const NodeSet>(parts.data(), static_cast<std::size_t>(used))};
        if (!fn(view)) stopped = true;
      }
      return;
    }
    // not enough positions left to open the required parts
    if (used + (n - i) < min_parts) return;
    const int limit = std::min(used + 1, max_parts);
    for (int b = 0; b < limit && !stopped; ++b) {
      labels[i] = b;
      parts[b].insert(i);
      walk(i + 1, std::max(used, b + 1));
      parts[b].erase(i);
    }
  }
};

}  // namespace

void for_each_set_partition(int n, int min_parts, int max_parts, const std::function<bool(const PartitionView&)>& fn,
                            int cap) {
  require_cap(n <= cap && n <= kMaxNodes,
              "partition enumeration over " + std::to_string(n) + " nodes exceeds the cap of " + std::to_string(cap));
  if (n < 1) return;
  RgsWalker w{n, min_parts, std::max(1, std::min(max_parts, n)), fn, std::vector<int>(n, 0),
              std::vector<NodeSet>(n), false};
  w.labels[0] = 0;
  w.parts[0].insert(0);
  w.walk(1, 1);
}

std::vector<PoCP> enum_partitions(int n, int max_parts, NodeId root, int cap) {
  std::vector<PoCP> out;
  for_each_set_partition(
      n, 2, max_parts,
      [&](const PartitionView& v) {
        out.push_back(PoCP::partition(n, root, {v.parts.begin(), v.parts.end()}));
        return true;
      },
      cap);
  return out;
}

std::vector<PoCP> enum_copartitions(int n, int max_parts, NodeId root, int cap) {
  std::vector<PoCP> out;
  for_each_set_partition(
      n, 3, max_parts,
      [&](const PartitionView& v) {
        std::vector<NodeSet> comp;
        for (NodeSet s : v.parts) comp.push_back(s.complement(n));
        out.push_back(PoCP::copartition(n, root, std::move(comp)));
        return true;
      },
      cap);
  return out;
}

long long partition_count(int n) {
  // Bell triangle
  std::vector<long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front() - 1;
}

}  // namespace fos
