#include "fos/random_instances.hpp"

#include "fos/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fos {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Edge random_pair(Rng& rng, int n) {
  const int u = uniform_int(rng, 0, n - 1);
  int v = uniform_int(rng, 0, n - 2);
  if (v >= u) ++v;
  return {u, v};
}

}  // namespace

UGraph random_graph(Rng& rng, int n, int m, bool simple) {
  UGraph g(n);
  if (!simple) {
    for (int i = 0; i < m; ++i) {
      const Edge e = random_pair(rng, n);
      g.add_edge(e.u, e.v);
    }
    return g;
  }
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(m)));
  for (const Edge& e : all) g.add_edge(e.u, e.v);
  return g;
}

Demand random_kl(Rng& rng, int n, int k, int l) { return Demand::kl(n, k, l, uniform_int(rng, 0, n - 1)); }

Demand random_table_demand(Rng& rng, const UGraph& g, int k, int l, int perturbations) {
  const int n = g.node_count();
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<int> value(count, 0);
  if (k > 0) {
    const Demand base = random_kl(rng, n, k, l);
    for (std::uint32_t b = 0; b < count; ++b) value[b] = base.eval(NodeSet::from_bits(b));
  }
  auto build = [&] {
    std::vector<std::pair<NodeSet, int>> entries;
    for (std::uint32_t b = 1; b + 1 < count; ++b) {
      if (value[b] != 0) entries.emplace_back(NodeSet::from_bits(b), value[b]);
    }
    return Demand::table(n, entries);
  };
  for (int i = 0; i < perturbations; ++i) {
    const std::uint32_t b = std::uniform_int_distribution<std::uint32_t>(1, count - 2)(rng);
    const int old = value[b];
    const int next = old + (coin(rng, 0.5) ? 1 : -1);
    if (next < 0 || next > table_value_cap(n)) continue;
    value[b] = next;
    if (check_crossing_gsupermodular(build(), g)) value[b] = old;
  }
  return build();
}

Instance random_instance(Rng& rng, const InstanceParams& p) {
  Instance inst;
  inst.n = p.n;
  const UGraph free = random_graph(rng, p.n, p.free_edges);
  inst.free_edges = free.edges();
  for (int i = 0; i < p.purchasable; ++i) {
    inst.purchasable.push_back(random_pair(rng, p.n));
    inst.cost.push_back(Rat(uniform_int(rng, 0, p.max_cost), uniform_int(rng, 1, p.max_cost_den)));
    inst.cost.back().canonicalize();
  }
  switch (p.demand) {
    case DemandKind::KL10: inst.demand = random_kl(rng, p.n, 1, 0); break;
    case DemandKind::KL11: inst.demand = random_kl(rng, p.n, 1, 1); break;
    case DemandKind::KL21: inst.demand = random_kl(rng, p.n, 2, 1); break;
    case DemandKind::KL22: inst.demand = random_kl(rng, p.n, 2, 2); break;
    case DemandKind::Table: {
      const int k = uniform_int(rng, 0, 2);
      const int l = uniform_int(rng, 0, k);
      inst.demand = random_table_demand(rng, free, k, l, p.perturbations);
      break;
    }
  }
  inst.root = inst.demand.is_kl() ? inst.demand.kl_params().r0 : uniform_int(rng, 0, p.n - 1);
  return inst;
}

SplitTree random_split_tree(Rng& rng, int n, NodeId root) {
  SplitTree t;
  t.n = n;
  t.root = root;
  t.sets.push_back(NodeSet::full(n).erase(root));
  t.children.emplace_back();
  for (std::size_t i = 0; i < t.sets.size(); ++i) {
    const NodeSet s = t.sets[i];
    if (s.size() < 2 || (i > 0 && !coin(rng, 0.7))) continue;
    std::vector<NodeId> members = s.members();
    std::shuffle(members.begin(), members.end(), rng);
    const int j = uniform_int(rng, 2, std::min<int>(3, static_cast<int>(members.size())));
    std::vector<NodeSet> parts(j);
    for (std::size_t m = 0; m < members.size(); ++m) {
      const int slot = m < static_cast<std::size_t>(j) ? static_cast<int>(m) : uniform_int(rng, 0, j - 1);
      parts[slot].insert(members[m]);
    }
    for (NodeSet c : parts) {
      t.children[i].push_back(t.sets.size());
      t.sets.push_back(c);
      t.children.emplace_back();
    }
  }
  return t;
}

PoCP random_family_from_tree(Rng& rng, const SplitTree& tree) {
  const std::size_t u = std::uniform_int_distribution<std::size_t>(0, tree.sets.size() - 1)(rng);
  std::vector<NodeSet> antichain;
  auto pick = [&](auto&& self, std::size_t i) -> void {
    if (tree.children[i].empty() || coin(rng, 0.5)) {
      antichain.push_back(tree.sets[i]);
      return;
    }
    for (std::size_t c : tree.children[i]) self(self, c);
  };
  if (tree.children[u].empty()) {
    antichain.push_back(tree.sets[u]);
  } else {
    for (std::size_t c : tree.children[u]) pick(pick, c);
  }
  const NodeSet uset = tree.sets[u];
  if (coin(rng, 0.5)) {
    std::vector<NodeSet> parts{uset.complement(tree.n)};
    parts.insert(parts.end(), antichain.begin(), antichain.end());
    return PoCP::partition(tree.n, tree.root, std::move(parts));
  }
  std::vector<NodeSet> parts{uset};
  for (NodeSet c : antichain) parts.push_back(c.complement(tree.n));
  return PoCP::copartition(tree.n, tree.root, std::move(parts));
}

SetFamily random_crossfree_regular(Rng& rng, int n, NodeId root, int count) {
  const SplitTree tree = random_split_tree(rng, n, root);
  std::vector<PoCP> fams;
  for (int i = 0; i < count; ++i) fams.push_back(random_family_from_tree(rng, tree));
  return union_of(fams);
}

std::pair<PoCP, PoCP> random_weakly_crossfree_pair(Rng& rng, int n, NodeId root) {
  if (n < 3) throw InputError("weakly cross-free pairs need at least 3 nodes");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const SplitTree tree = random_split_tree(rng, n, root);
    PoCP p = random_family_from_tree(rng, tree);
    PoCP q = random_family_from_tree(rng, tree);
    if (weakly_cross_free(p, q)) return {std::move(p), std::move(q)};
  }
  throw ContractViolation("no weakly cross-free pair found");
}

}  // namespace fos
