#include "support.hpp"

#include "fos/errors.hpp"
#include "fos/gaplab.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fos;
using namespace fos::testing;

namespace {

UGraph complete(int n) {
  UGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

bool def_cross_free(const PoCP& p, const PoCP& q) {
  std::vector<NodeSet> all = p.parts();
  all.insert(all.end(), q.parts().begin(), q.parts().end());
  for (NodeSet a : all) {
    for (NodeSet b : all) {
      if (crossing(a, b, p.node_count())) return false;
    }
  }
  return true;
}

bool def_dominates(const std::vector<NodeSet>& q, const std::vector<NodeSet>& p) {
  return std::all_of(p.begin(), p.end(), [&](NodeSet part) {
    return std::any_of(q.begin(), q.end(), [&](NodeSet big) { return part.subset_of(big); });
  });
}

bool def_strongly_dominates(const std::vector<NodeSet>& q, const std::vector<NodeSet>& p) {
  NodeSet supp;
  for (NodeSet s : p) supp = supp | s;
  return std::any_of(q.begin(), q.end(), [&](NodeSet big) { return supp.subset_of(big); });
}

std::vector<NodeSet> def_tilde(const PoCP& p) {
  std::vector<NodeSet> out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    out.push_back(p.is_partition() ? p.parts()[i] : p.parts()[i].complement(p.node_count()));
  }
  return out;
}

bool def_disjoint(const std::vector<NodeSet>& a, const std::vector<NodeSet>& b) {
  NodeSet sa, sb;
  for (NodeSet s : a) sa = sa | s;
  for (NodeSet s : b) sb = sb | s;
  return !sa.intersects(sb);
}

bool def_strongly_cross_free(const PoCP& p, const PoCP& q) {
  if (!def_cross_free(p, q)) return false;
  const auto tp = def_tilde(p);
  const auto tq = def_tilde(q);
  if (def_disjoint(tp, tq)) return true;
  if (p.is_partition() == q.is_partition()) return def_dominates(tp, tq) || def_dominates(tq, tp);
  return def_strongly_dominates(tp, tq) || def_strongly_dominates(tq, tp);
}

PoCP random_pocp(Rng& rng, int n, NodeId root) {
  const auto parts = enum_partitions(n, n, root);
  const PoCP p = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
  if (p.size() >= 3 && uniform_int(rng, 0, 1) == 1) return p.complemented();
  return p;
}

}  // namespace

TEST_CASE("chi and e_count") {
  const UGraph k3 = complete(3);
  const PoCP singletons = PoCP::partition(3, 0, {NodeSet::of({0}), NodeSet::of({1}), NodeSet::of({2})});
  CHECK(chi(singletons, k3).size() == 3);

  const UGraph k5 = complete(5);
  const PoCP star = PoCP::partition(5, 0, {NodeSet::of({0, 1, 2, 3}), NodeSet::of({4})});
  std::vector<std::size_t> delta;
  for (std::size_t i = 0; i < k5.edge_count(); ++i) {
    if (crosses(k5.edge(i), NodeSet::of({4}))) delta.push_back(i);
  }
  CHECK(chi(star, k5) == delta);

  UGraph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  CHECK(e_count(PoCP::partition(4, 0, {NodeSet::of({0}), NodeSet::of({1}), NodeSet::of({2}), NodeSet::of({3})}), c4) ==
        4);
  CHECK(e_count(PoCP::partition(4, 0, {NodeSet::of({0, 1}), NodeSet::of({2, 3})}), c4) == 2);

  // parallel edges count separately
  UGraph par(2);
  par.add_edge(0, 1);
  par.add_edge(0, 1);
  CHECK(e_count(PoCP::partition(2, 0, {NodeSet::of({0}), NodeSet::of({1})}), par) == 2);
}

TEST_CASE("chi agrees with the pairwise definition on random co-partitions") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const UGraph g = random_graph(rng, 7, uniform_int(rng, 3, 18));
    const PoCP p = random_pocp(rng, 7, 0);
    CHECK(chi(p, g) == brute_chi(p.parts(), g));
  }
}

TEST_CASE("partition and its complement co-partition share chi") {
  for (int n = 3; n <= 6; ++n) {
    const UGraph g = complete(n);
    for (const PoCP& p : enum_partitions(n, n, 0)) {
      if (p.size() < 3) continue;
      std::vector<NodeSet> comp;
      for (NodeSet s : p.parts()) comp.push_back(s.complement(n));
      CHECK(brute_chi(comp, g) == brute_chi(p.parts(), g));
      CHECK(chi(p.complemented(), g) == chi(p, g));
    }
  }
}

TEST_CASE("e_count of the gap tree on its fundamental cuts") {
  for (int n = 2; n <= 5; ++n) {
    const GapInstance gi = build_gap_instance(n, 2);
    UGraph tree(2 * n);
    for (std::size_t i = 0; i < gi.ag_count; ++i) tree.add_edge(gi.mixed.arcs[i].tail, gi.mixed.arcs[i].head);
    for (NodeSet z : fundamental_cuts(gi)) {
      const PoCP p = PoCP::from_sets(2 * n, 0, {z, z.complement(2 * n)});
      CHECK(e_count(p, tree) == static_cast<int>(brute_chi(p.parts(), tree).size()));
      CHECK(e_count(p, tree) == 1);
    }
  }
}

TEST_CASE("root convention and tilde") {
  // nodes: r = 0, a = 1, b = 2, c = 3
  const PoCP p = PoCP::partition(4, 0, {NodeSet::of({2}), NodeSet::of({0, 1}), NodeSet::of({3})});
  CHECK(p.first() == NodeSet::of({0, 1}));
  CHECK(tilde(p).parts == std::vector<NodeSet>{NodeSet::of({2}), NodeSet::of({3})});

  const PoCP q = PoCP::copartition(3, 0, {NodeSet::of({0, 2}), NodeSet::of({1, 2}), NodeSet::of({0, 1})});
  CHECK(!q.is_partition());
  CHECK(q.first() == NodeSet::of({1, 2}));
  auto t = tilde(q).parts;
  std::sort(t.begin(), t.end());
  CHECK(t == std::vector<NodeSet>{NodeSet::of({1}), NodeSet::of({2})});
  CHECK(tilde(q).support() == q.first());

  const PoCP two = PoCP::partition(3, 0, {NodeSet::of({0}), NodeSet::of({1, 2})});
  CHECK(tilde(two).parts == std::vector<NodeSet>{NodeSet::of({1, 2})});

  // a two-part co-partition is the same family as a partition
  const PoCP c2 = PoCP::copartition(3, 0, {NodeSet::of({0}), NodeSet::of({1, 2})});
  CHECK(c2.is_partition());
  CHECK(c2 == two);

  CHECK_THROWS_AS(PoCP::partition(3, 0, {NodeSet::of({0, 1}), NodeSet::of({1, 2})}), InputError);
}

TEST_CASE("tilde parts are disjoint and avoid the root") {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const NodeId root = uniform_int(rng, 0, 5);
    const PoCP p = random_pocp(rng, 6, root);
    const auto t = tilde(p).parts;
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK_FALSE(t[i].contains(root));
      for (std::size_t j = i + 1; j < t.size(); ++j) CHECK_FALSE(t[i].intersects(t[j]));
    }
  }
}

TEST_CASE("dominates") {
  const SubPartition q1{{NodeSet::of({1, 2, 3})}};
  const SubPartition p1{{NodeSet::of({1}), NodeSet::of({2})}};
  CHECK(dominates(q1, p1) == Domination::StronglyDominates);
  const SubPartition q2{{NodeSet::of({1, 2}), NodeSet::of({3, 4})}};
  const SubPartition p2{{NodeSet::of({1}), NodeSet::of({3})}};
  CHECK(dominates(q2, p2) == Domination::Dominates);
  CHECK(dominates(p2, q2) == Domination::None);

  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const SplitTree tree = random_split_tree(rng, 8, 0);
    const auto a = tilde(random_family_from_tree(rng, tree)).parts;
    const auto b = tilde(random_family_from_tree(rng, tree)).parts;
    const Domination d = dominates(SubPartition{a}, SubPartition{b});
    const bool dom = def_dominates(a, b);
    const bool strong = def_strongly_dominates(a, b);
    CHECK((d != Domination::None) == dom);
    CHECK((d == Domination::StronglyDominates) == strong);
  }
}

TEST_CASE("strongly cross-free examples") {
  const PoCP p = PoCP::partition(5, 0, {NodeSet::of({0}), NodeSet::of({1, 2}), NodeSet::of({3}), NodeSet::of({4})});
  CHECK(strongly_cross_free(p, p));

  // two partitions with interleaved non-root parts: cross-free, not strongly
  const PoCP q = PoCP::partition(5, 0, {NodeSet::of({0}), NodeSet::of({1}), NodeSet::of({2}), NodeSet::of({3, 4})});
  CHECK(cross_free(p, q));
  CHECK_FALSE(strongly_cross_free(p, q));
  CHECK(weakly_cross_free(p, q));

  // a co-partition part inside a partition part
  const PoCP part = PoCP::partition(4, 0, {NodeSet::of({0, 1, 2}), NodeSet::of({3})});
  const PoCP cop = PoCP::copartition(4, 0, {NodeSet::of({1, 2, 3}), NodeSet::of({0, 2, 3}), NodeSet::of({0, 1})});
  CHECK(mixed_strongly_cross_free(part, cop));
  CHECK(strongly_cross_free(part, cop));
}

TEST_CASE("strongly cross-free matches the definition and the mixed-kind characterization") {
  Rng rng(24);
  int mixed = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = uniform_int(rng, 3, 6);
    const NodeId root = uniform_int(rng, 0, n - 1);
    PoCP a = random_pocp(rng, n, root);
    PoCP b = random_pocp(rng, n, root);
    if (trial % 2 == 0) {
      const SplitTree tree = random_split_tree(rng, n, root);
      a = random_family_from_tree(rng, tree);
      b = random_family_from_tree(rng, tree);
    }
    CHECK(cross_free(a, b) == def_cross_free(a, b));
    CHECK(strongly_cross_free(a, b) == def_strongly_cross_free(a, b));
    CHECK(strongly_cross_free(a, b) == strongly_cross_free(b, a));
    if (a.is_partition() != b.is_partition()) {
      ++mixed;
      const PoCP& part = a.is_partition() ? a : b;
      const PoCP& cop = a.is_partition() ? b : a;
      CHECK(mixed_strongly_cross_free(part, cop) == strongly_cross_free(part, cop));
    }
    if (strongly_cross_free(a, b)) {
      // tilde union laminar, supports nested or disjoint
      auto all = tilde(a).parts;
      const auto tb = tilde(b).parts;
      all.insert(all.end(), tb.begin(), tb.end());
      for (NodeSet x : all) {
        for (NodeSet y : all) CHECK(laminar_pair(x, y));
      }
      CHECK(laminar_pair(tilde(a).support(), tilde(b).support()));
    }
  }
  CHECK(mixed > 100);
}

TEST_CASE("uncrossing two crossing sets never increases crossings with a third") {
  Rng rng(25);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = uniform_int(rng, 3, 6);
    const auto pick = [&] { return NodeSet::from_bits(std::uniform_int_distribution<std::uint32_t>(1, (1u << n) - 2)(rng)); };
    const NodeSet a = pick(), b = pick(), c = pick();
    if (!crossing(a, b, n)) continue;
    const std::vector<NodeSet> before{a, b};
    const std::vector<NodeSet> after{a & b, a | b};
    const std::vector<NodeSet> third{c};
    CHECK(crossing_pairs(before, third, n) >= crossing_pairs(after, third, n));
  }
}

TEST_CASE("partition enumeration counts") {
  CHECK(enum_partitions(3, 3).size() == 4);
  CHECK(enum_partitions(4, 4).size() == 14);
  CHECK(static_cast<long long>(enum_partitions(8, 8).size()) == bell(8) - 1);
  CHECK(enum_partitions(8, 8).size() == 4139);
  for (int n = 2; n <= 9; ++n) CHECK(partition_count(n) == bell(n) - 1);

  // each partition exactly once, root part first
  const auto parts = enum_partitions(6, 6, 3);
  std::vector<std::string> codes;
  for (const PoCP& p : parts) {
    CHECK(p.first().contains(3));
    codes.push_back(p.encode());
  }
  std::sort(codes.begin(), codes.end());
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());

  // co-partitions: the ≥3-part partitions complemented
  std::size_t three_plus = 0;
  for (const PoCP& p : enum_partitions(5, 5)) three_plus += p.size() >= 3 ? 1 : 0;
  CHECK(enum_copartitions(5, 5).size() == three_plus);

  CHECK_THROWS_AS(enum_partitions(13, 13), CapExceeded);
}
