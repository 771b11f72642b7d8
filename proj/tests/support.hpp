#pragma once

// Brute-force reference implementations used as independent oracles.

#include "fos/demand.hpp"
#include "fos/exactlp.hpp"
#include "fos/graph.hpp"
#include "fos/random_instances.hpp"
#include "fos/setfam.hpp"

#include <optional>
#include <vector>

namespace fos::testing {

inline std::vector<NodeSet> proper_sets(int n) {
  std::vector<NodeSet> out;
  for (std::uint32_t b = 1; b + 1 < (std::uint32_t{1} << n); ++b) out.push_back(NodeSet::from_bits(b));
  return out;
}

inline Rat brute_deg(const std::vector<Edge>& edges, const std::vector<Rat>& w, NodeSet s) {
  Rat total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool a = s.contains(edges[i].u);
    const bool b = s.contains(edges[i].v);
    if (a != b) total += w[i];
  }
  return total;
}

inline int brute_in(const std::vector<Arc>& arcs, NodeSet s) {
  int c = 0;
  for (const Arc& a : arcs) c += (s.contains(a.head) && !s.contains(a.tail)) ? 1 : 0;
  return c;
}

/// min over ∅⊂S⊂V of d(S)
inline int brute_edge_connectivity(const UGraph& g) {
  int best = 1 << 30;
  for (NodeSet s : proper_sets(g.node_count())) {
    int d = 0;
    for (const Edge& e : g.edges()) d += s.contains(e.u) != s.contains(e.v) ? 1 : 0;
    best = std::min(best, d);
  }
  return best;
}

/// Whether an orientation covers f, checked on every set.
inline bool brute_covers(const std::vector<Arc>& arcs, const Demand& f, int n) {
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
    const NodeSet s = NodeSet::from_bits(b);
    if (brute_in(arcs, s) < f.eval(s)) return false;
  }
  return true;
}

/// Plain recursive search over orientations (no Gray code, no incremental state).
inline bool brute_orientable(const UGraph& g, const Demand& f) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m; ++i) {
      arcs.push_back((mask >> i) & 1u ? Arc{edges[i].v, edges[i].u} : Arc{edges[i].u, edges[i].v});
    }
    if (brute_covers(arcs, f, g.node_count())) return true;
  }
  return false;
}

/// χ by the pairwise definition: edge (u,v) with u ∈ S∖T and v ∈ T∖S.
inline std::vector<std::size_t> brute_chi(const std::vector<NodeSet>& parts, const UGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    bool hit = false;
    for (std::size_t a = 0; a < parts.size() && !hit; ++a) {
      for (std::size_t b = 0; b < parts.size() && !hit; ++b) {
        if (a == b) continue;
        const NodeSet only_a = parts[a] - parts[b];
        const NodeSet only_b = parts[b] - parts[a];
        if ((only_a.contains(e.u) && only_b.contains(e.v)) || (only_a.contains(e.v) && only_b.contains(e.u))) {
          hit = true;
        }
      }
    }
    if (hit) out.push_back(i);
  }
  return out;
}

/// Solves A x = b by Gauss-Jordan elimination; nothing if singular.
inline std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rat factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
      b[r] -= factor * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Optimal value of a small LP by enumerating every choice of var_count
/// constraints (rows and bounds) held at equality. Nothing if infeasible.
inline std::optional<Rat> lp_by_vertex_enumeration(const LpProblem& p) {
  const std::size_t nv = p.vars.size();
  std::vector<std::vector<Rat>> coeff;
  std::vector<Rat> rhs;
  for (const LpRow& r : p.rows) {
    std::vector<Rat> v(nv, 0);
    for (const auto& [j, c] : r.coeffs) v[j] += c;
    coeff.push_back(v);
    rhs.push_back(r.rhs);
  }
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<Rat> v(nv, 0);
    v[j] = 1;
    coeff.push_back(v);
    rhs.push_back(p.vars[j].lower);
    coeff.push_back(v);
    rhs.push_back(p.vars[j].upper);
  }
  const std::size_t m = coeff.size();
  std::optional<Rat> best;
  std::vector<std::size_t> pick(nv);
  auto visit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == nv) {
      std::vector<std::vector<Rat>> a;
      std::vector<Rat> b;
      for (std::size_t i : pick) {
        a.push_back(coeff[i]);
        b.push_back(rhs[i]);
      }
      auto x = solve_square(a, b);
      if (!x || !is_feasible(p, *x)) return;
      Rat obj = 0;
      for (std::size_t j = 0; j < nv; ++j) obj += p.vars[j].cost * (*x)[j];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);
  return best;
}

inline long long bell(int n) {
  std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(n + 1, 0));
  t[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    t[i][0] = t[i - 1][i - 1];
    for (int j = 1; j <= i; ++j) t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
  }
  return t[n][0];
}

}  // namespace fos::testing
