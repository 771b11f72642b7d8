#include "fos/uncross.hpp"

#include "fos/errors.hpp"
#include "fos/linalg.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace fos {

Rat psi(const Lp2System& sys, std::span<const Rat> x, std::span<const NodeSet> fam) {
  const UGraph vars = sys.var_graph();
  Rat total = 0;
  for (NodeSet s : fam) {
    total += deg_cut(vars, x, s) / 2 - sys.demand.eval(s) + make_rat(deg_cut(sys.base, s), 2);
  }
  return total;
}

std::optional<int> is_regular(std::span<const NodeSet> fam, int n) {
  std::vector<int> cov(n, 0);
  for (NodeSet s : fam) {
    for (NodeId v : s.members()) {
      if (v >= n) return std::nullopt;
      ++cov[v];
    }
  }
  if (std::all_of(cov.begin(), cov.end(), [&](int c) { return c == cov[0]; })) return cov[0];
  return std::nullopt;
}

bool is_cross_free(std::span<const NodeSet> fam, int n) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (crossing(fam[i], fam[j], n)) return false;
    }
  }
  return true;
}

SetFamily union_of(std::span<const PoCP> fams) {
  SetFamily out;
  for (const PoCP& p : fams) out.insert(out.end(), p.parts().begin(), p.parts().end());
  return out;
}

std::vector<PoCP> decompose_regular_crossfree(std::span<const NodeSet> fam, int n, NodeId root) {
  const NodeSet full = NodeSet::full(n);
  for (NodeSet s : fam) require_contract(!s.empty() && s != full && s.subset_of(full), "decompose: improper member");
  require_contract(is_cross_free(fam, n), "decompose: family is not cross-free");
  require_contract(is_regular(fam, n).has_value(), "decompose: family is not regular");

  // Sets containing the root are replaced by their complements; the result is
  // laminar and every non-root node lies in as many flipped as unflipped sets.
  struct Item {
    NodeSet set;
    bool flipped;
    bool alive;
  };
  std::vector<Item> items;
  for (NodeSet s : fam) {
    const bool flip = s.contains(root);
    items.push_back({flip ? s.complement(n) : s, flip, true});
  }

  auto maximal_inside = [&](NodeSet u, bool flipped, std::size_t skip) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i != skip && items[i].alive && items[i].flipped == flipped && items[i].set.subset_of(u)) cand.push_back(i);
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [&](std::size_t a, std::size_t b) { return items[a].set.size() > items[b].set.size(); });
    std::vector<std::size_t> chosen;
    NodeSet covered;
    for (std::size_t i : cand) {
      if (items[i].set.intersects(covered)) continue;
      chosen.push_back(i);
      covered = covered | items[i].set;
    }
    require_contract(covered == u, "decompose: children do not cover " + u.to_string());
    return chosen;
  };

  std::vector<PoCP> out;
  while (true) {
    std::optional<std::size_t> top;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!items[i].alive) continue;
      if (!top || std::make_pair(items[i].set.size(), items[i].flipped) >
                      std::make_pair(items[*top].set.size(), items[*top].flipped)) {
        top = i;
      }
    }
    if (!top) break;
    const Item u = items[*top];
    items[*top].alive = false;
    const auto children = maximal_inside(u.set, !u.flipped, *top);
    std::vector<NodeSet> parts;
    if (u.flipped) {
      parts.push_back(u.set.complement(n));
      for (std::size_t i : children) parts.push_back(items[i].set);
      for (std::size_t i : children) items[i].alive = false;
      out.push_back(PoCP::partition(n, root, std::move(parts)));
    } else {
      parts.push_back(u.set);
      for (std::size_t i : children) parts.push_back(items[i].set.complement(n));
      for (std::size_t i : children) items[i].alive = false;
      out.push_back(PoCP::copartition(n, root, std::move(parts)));
    }
  }

  SetFamily a(fam.begin(), fam.end());
  SetFamily b = union_of(out);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  require_contract(a == b, "decompose: multiset union differs from the input");
  return out;
}

SetFamily uncross_pair_sets(SetFamily fam, int n) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < fam.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        if (crossing(fam[i], fam[j], n)) {
          const NodeSet a = fam[i];
          const NodeSet b = fam[j];
          fam[i] = a & b;
          fam[j] = a | b;
          changed = true;
          break;
        }
      }
    }
  }
  return fam;
}

namespace {

// Maximal members of a set family, one copy each, in ascending order.
std::vector<NodeSet> maximal_sets(std::span<const NodeSet> fam) {
  std::vector<NodeSet> out;
  for (NodeSet s : fam) {
    const bool dominated = std::any_of(fam.begin(), fam.end(), [s](NodeSet t) { return s != t && s.subset_of(t); });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeSet> complements(std::span<const NodeSet> sets, int n) {
  std::vector<NodeSet> out;
  for (NodeSet s : sets) out.push_back(s.complement(n));
  return out;
}

}  // namespace

UpsilonResult upsilon(const PoCP& p_in, const PoCP& q_in) {
  require_contract(weakly_cross_free(p_in, q_in), "upsilon: inputs are not weakly cross-free");
  const int n = p_in.node_count();
  const NodeId root = p_in.root();
  UpsilonResult res;

  if (p_in.kind() == q_in.kind()) {
    const bool swap = !tilde(p_in).support().subset_of(tilde(q_in).support());
    const PoCP& p = swap ? q_in : p_in;
    const PoCP& q = swap ? p_in : q_in;
    require_contract(tilde(p).support().subset_of(tilde(q).support()), "upsilon: supports are not nested");
    SetFamily m = tilde(p).parts;
    const auto tq = tilde(q).parts;
    m.insert(m.end(), tq.begin(), tq.end());
    const std::vector<NodeSet> top = maximal_sets(m);
    // F' takes one copy of every maximal member, F keeps the rest.
    SetFamily rest = m;
    for (NodeSet s : top) rest.erase(std::find(rest.begin(), rest.end(), s));
    std::vector<NodeSet> meet{p.first()};
    std::vector<NodeSet> join{q.first()};
    if (p.is_partition()) {
      meet.insert(meet.end(), rest.begin(), rest.end());
      join.insert(join.end(), top.begin(), top.end());
      res.members = {PoCP::partition(n, root, meet), PoCP::partition(n, root, join)};
    } else {
      const auto rc = complements(rest, n);
      const auto tc = complements(top, n);
      meet.insert(meet.end(), rc.begin(), rc.end());
      join.insert(join.end(), tc.begin(), tc.end());
      res.members = {PoCP::copartition(n, root, meet), PoCP::copartition(n, root, join)};
    }
    return res;
  }

  const PoCP& p = p_in.is_partition() ? p_in : q_in;
  const PoCP& q = p_in.is_partition() ? q_in : p_in;
  const std::vector<NodeSet> qbar = complements(q.parts(), n);
  SetFamily both(p.parts().begin(), p.parts().end());
  both.insert(both.end(), qbar.begin(), qbar.end());
  for (NodeSet s : maximal_sets(both)) {
    const bool in_p = std::find(p.parts().begin(), p.parts().end(), s) != p.parts().end();
    const bool in_qbar = std::find(qbar.begin(), qbar.end(), s) != qbar.end();
    std::vector<NodeSet> parts{in_qbar ? s.complement(n) : s};
    if (in_qbar) {
      for (NodeSet pi : p.parts()) {
        if (pi.subset_of(s)) parts.push_back(pi);
      }
      res.members.push_back(PoCP::partition(n, root, std::move(parts)));
    } else {
      require_contract(in_p, "upsilon: maximal set from neither family");
      for (std::size_t j = 0; j < qbar.size(); ++j) {
        if (qbar[j].subset_of(s)) parts.push_back(q.parts()[j]);
      }
      res.members.push_back(PoCP::copartition(n, root, std::move(parts)));
    }
    if (s.contains(root)) {
      require_contract(!res.special.has_value(), "upsilon: two maximal sets contain the root");
      res.special = res.members.size() - 1;
    }
  }
  return res;
}

std::vector<Rat> chi_sum(const Lp2System& sys, std::span<const PoCP> fams) {
  std::vector<Rat> total(sys.var_edges.size(), 0);
  for (const PoCP& p : fams) {
    for (std::size_t i : lp2_support(sys, p)) total[i] += 1;
  }
  return total;
}

namespace {

bool is_tight(const Lp2System& sys, std::span<const Rat> x, const PoCP& p) {
  return lp2_lhs(sys, p, x) == lp2_rhs(sys, p);
}

struct Potential {
  int nu = 0;
  int mu = 0;
  auto operator<=>(const Potential&) const = default;
};

Potential potential(const PoCP& q, std::span<const PoCP> fam) {
  Potential pot;
  for (const PoCP& p : fam) {
    pot.nu += crossing_pairs(q.parts(), p.parts(), q.node_count());
    pot.mu += weakly_cross_free(q, p) ? 1 : 0;
  }
  return pot;
}

std::vector<Rat> add(std::vector<Rat> a, const std::vector<Rat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Among `cands`, the member outside the span with the smallest potential
// (ties: family order).
std::optional<PoCP> pick_outside_span(const std::vector<PoCP>& cands, const RowSpace& span, const Lp2System& sys,
                                      std::span<const PoCP> fam) {
  std::optional<std::pair<Potential, PoCP>> best;
  for (const PoCP& r : cands) {
    if (span.contains(lp2_vector(sys, r))) continue;
    const Potential pot = potential(r, fam);
    if (!best || pot < best->first || (pot == best->first && r < best->second)) best.emplace(pot, r);
  }
  if (!best) return std::nullopt;
  return best->second;
}

}  // namespace

BasisFamily extract_strongly_crossfree_basis(const Lp2System& sys, std::span<const Rat> x, BasisStrategy strategy) {
  if (x.size() != sys.var_edges.size()) throw InputError("basis extraction: point has the wrong dimension");
  BasisFamily out;
  out.residual = sys;
  out.residual.base = sys.base;
  out.residual.var_edges.clear();
  out.residual.var_cost.clear();
  for (std::size_t i = 0; i < x.size(); ++i) {
    require_contract(x[i] >= 0 && x[i] <= 1, "basis extraction: point leaves the unit box");
    if (x[i] == 1) {
      out.residual.base.add_edge(sys.var_edges[i].u, sys.var_edges[i].v);
    } else if (x[i] > 0) {
      out.residual.var_edges.push_back(sys.var_edges[i]);
      out.residual.var_cost.push_back(sys.var_cost[i]);
      out.x.push_back(x[i]);
      out.var_origin.push_back(i);
    }
  }
  const Lp2System& res = out.residual;
  const std::size_t dim = res.var_edges.size();

  std::vector<Lp2Row> tight = tight_rows(res, out.x);
  std::sort(tight.begin(), tight.end(), [](const Lp2Row& a, const Lp2Row& b) { return a.family < b.family; });
  out.stats.tight_rows = static_cast<int>(tight.size());
  {
    RowSpace all(dim);
    for (const Lp2Row& r : tight) all.add(lp2_vector(res, r.family));
    require_contract(all.rank() == dim, "x is not basic: tight rows have rank " + std::to_string(all.rank()) +
                                            " over " + std::to_string(dim) + " fractional coordinates");
  }

  RowSpace span(dim);
  std::vector<PoCP>& fam = out.members;

  if (strategy == BasisStrategy::Greedy) {
    for (const Lp2Row& r : tight) {
      const auto v = lp2_vector(res, r.family);
      if (span.contains(v)) continue;
      const bool fits = std::all_of(fam.begin(), fam.end(), [&](const PoCP& p) { return strongly_cross_free(p, r.family); });
      if (fits) {
        span.add(v);
        fam.push_back(r.family);
      }
    }
    require_contract(span.rank() == dim, "a maximal strongly cross-free independent family does not span the tight rows");
    return out;
  }

  for (const Lp2Row& row : tight) {
    if (span.contains(lp2_vector(res, row.family))) continue;
    PoCP q = row.family;
    while (true) {
      const Potential pot = potential(q, fam);
      if (pot.nu == 0 && pot.mu == 0) break;
      ++out.stats.descent_steps;
      std::vector<PoCP> cands;
      std::size_t partner = 0;
      if (pot.nu > 0) {
        while (crossing_pairs(q.parts(), fam[partner].parts(), res.n) == 0) ++partner;
        const PoCP& p = fam[partner];
        SetFamily f = union_of(std::vector<PoCP>{p, q});
        SetFamily g = uncross_pair_sets(f, res.n);
        require_contract(psi(res, out.x, g) == 0, "uncrossing left a family with positive slack");
        cands = decompose_regular_crossfree(g, res.n, res.root);
        ++out.stats.uncross_steps;
      } else {
        while (!weakly_cross_free(q, fam[partner])) ++partner;
        cands = upsilon(fam[partner], q).members;
        ++out.stats.upsilon_steps;
      }
      const PoCP& p = fam[partner];
      for (const PoCP& r : cands) require_contract(is_tight(res, out.x, r), "uncrossing produced a non-tight member");
      require_contract(chi_sum(res, cands) == add(lp2_vector(res, p), lp2_vector(res, q)),
                       "uncrossing changed the characteristic vector sum");
      auto next = pick_outside_span(cands, span, res, fam);
      require_contract(next.has_value(), "every uncrossed member lies in the span");
      const Potential after = potential(*next, fam);
      if (pot.nu > 0) {
        require_contract(after.nu < pot.nu, "crossing count did not decrease");
      } else {
        require_contract(after.nu == 0 && after.mu < pot.mu, "weak-pair count did not decrease");
      }
      q = *next;
    }
    span.add(lp2_vector(res, q));
    fam.push_back(q);
  }
  require_contract(span.rank() == dim, "descent family does not span the tight rows");
  return out;
}

BasisCheck check_basis(const BasisFamily& b) {
  BasisCheck c;
  const Lp2System& res = b.residual;
  c.tight = std::all_of(b.members.begin(), b.members.end(), [&](const PoCP& p) { return is_tight(res, b.x, p); });
  c.strongly_cross_free = true;
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    for (std::size_t j = i + 1; j < b.members.size(); ++j) {
      if (!strongly_cross_free(b.members[i], b.members[j])) c.strongly_cross_free = false;
    }
  }
  std::vector<RatVector> rows;
  for (const PoCP& p : b.members) rows.push_back(lp2_vector(res, p));
  c.independent = rank(rows) == b.members.size() || (rows.empty() && b.members.empty());
  c.full_dimension = b.members.size() == res.var_edges.size();
  return c;
}

bool precedes(const PoCP& p, const PoCP& q) { return dominates(tilde(q), tilde(p)) != Domination::None; }

bool DominationForest::is_ancestor(std::size_t anc, std::size_t node) const {
  auto cur = parent[node];
  while (cur) {
    if (*cur == anc) return true;
    cur = parent[*cur];
  }
  return false;
}

DominationForest domination_forest(std::span<const PoCP> fam) {
  const std::size_t m = fam.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      require_contract(strongly_cross_free(fam[i], fam[j]), "domination forest: family is not strongly cross-free");
      require_contract(!(precedes(fam[i], fam[j]) && precedes(fam[j], fam[i])),
                       "domination forest: two members dominate each other");
    }
  }
  DominationForest forest;
  forest.parent.assign(m, std::nullopt);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i && precedes(fam[i], fam[j])) above.push_back(j);
    }
    for (std::size_t a : above) {
      for (std::size_t b : above) {
        require_contract(a == b || precedes(fam[a], fam[b]) || precedes(fam[b], fam[a]),
                         "domination forest: dominators do not form a chain");
      }
    }
    for (std::size_t a : above) {
      const bool lowest = std::all_of(above.begin(), above.end(),
                                      [&](std::size_t b) { return a == b || precedes(fam[a], fam[b]); });
      if (lowest) forest.parent[i] = a;
    }
  }
  return forest;
}

}  // namespace fos
