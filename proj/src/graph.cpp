#include "fos/graph.hpp"

#include "fos/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace fos {

UGraph::UGraph(int n, std::vector<Edge> edges) : n_(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

std::size_t UGraph::add_edge(NodeId u, NodeId v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  if (u == v) throw InputError("self-loop at node " + std::to_string(u));
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

Rat deg_cut(const UGraph& g, std::span<const Rat> weights, NodeSet s) {
  Rat total = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (crosses(g.edge(i), s)) total += weights[i];
  }
  return total;
}

int deg_cut(const UGraph& g, NodeSet s) {
  int total = 0;
  for (const Edge& e : g.edges()) total += crosses(e, s) ? 1 : 0;
  return total;
}

int cross_pair(const UGraph& g, NodeSet s, NodeSet t) {
  const NodeSet a = s - t;
  const NodeSet b = t - s;
  int total = 0;
  for (const Edge& e : g.edges()) {
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) ++total;
  }
  return total;
}

Rat in_cut(std::span<const Arc> arcs, std::span<const Rat> weights, NodeSet s) {
  Rat total = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (enters(arcs[i], s)) total += weights[i];
  }
  return total;
}

int in_degree(std::span<const Arc> arcs, NodeSet s) {
  int total = 0;
  for (const Arc& a : arcs) total += enters(a, s) ? 1 : 0;
  return total;
}

namespace {

template <class Cap>
FlowResult<Cap> edmonds_karp(int n, std::span<const Arc> arcs, std::span<const Cap> cap, NodeId s, NodeId t) {
  if (s == t) throw InputError("max_flow: source equals sink");
  // residual edges 2i (forward) and 2i+1 (backward)
  std::vector<Cap> residual(2 * arcs.size());
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (cap[i] < 0) throw InputError("max_flow: negative capacity");
    residual[2 * i] = cap[i];
    residual[2 * i + 1] = 0;
    adj[arcs[i].tail].push_back(static_cast<int>(2 * i));
    adj[arcs[i].head].push_back(static_cast<int>(2 * i + 1));
  }
  auto head_of = [&](int r) { return (r & 1) ? arcs[r / 2].tail : arcs[r / 2].head; };

  FlowResult<Cap> result;
  result.value = 0;
  std::vector<int> via(n);
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    std::queue<NodeId> queue;
    queue.push(s);
    while (!queue.empty() && !seen[t]) {
      NodeId u = queue.front();
      queue.pop();
      for (int r : adj[u]) {
        NodeId w = head_of(r);
        if (!seen[w] && residual[r] > 0) {
          seen[w] = 1;
          via[w] = r;
          queue.push(w);
        }
      }
    }
    if (!seen[t]) {
      NodeSet side;
      for (NodeId v = 0; v < n; ++v) {
        if (seen[v]) side.insert(v);
      }
      result.source_side = side;
      return result;
    }
    Cap bottleneck = residual[via[t]];
    for (NodeId w = t; w != s;) {
      int r = via[w];
      if (residual[r] < bottleneck) bottleneck = residual[r];
      w = head_of(r ^ 1);
    }
    for (NodeId w = t; w != s;) {
      int r = via[w];
      residual[r] -= bottleneck;
      residual[r ^ 1] += bottleneck;
      w = head_of(r ^ 1);
    }
    result.value += bottleneck;
  }
}

}  // namespace

FlowResult<Rat> max_flow(int n, std::span<const Arc> arcs, std::span<const Rat> cap, NodeId s, NodeId t) {
  return edmonds_karp<Rat>(n, arcs, cap, s, t);
}

FlowResult<std::int64_t> max_flow(int n, std::span<const Arc> arcs, std::span<const std::int64_t> cap, NodeId s,
                                  NodeId t) {
  return edmonds_karp<std::int64_t>(n, arcs, cap, s, t);
}

std::vector<Arc> bidirect(const UGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return arcs;
}

int edge_connectivity(const UGraph& g) {
  const int n = g.node_count();
  if (n < 2) throw InputError("edge_connectivity needs at least 2 nodes");
  const auto arcs = bidirect(g);
  const std::vector<std::int64_t> cap(arcs.size(), 1);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (NodeId v = 1; v < n; ++v) best = std::min(best, max_flow(n, arcs, std::span<const std::int64_t>(cap), 0, v).value);
  return static_cast<int>(best);
}

int arc_connectivity(int n, std::span<const Arc> arcs) {
  if (n < 2) throw InputError("arc_connectivity needs at least 2 nodes");
  const std::vector<std::int64_t> cap(arcs.size(), 1);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (NodeId v = 1; v < n; ++v) {
    best = std::min(best, max_flow(n, arcs, std::span<const std::int64_t>(cap), 0, v).value);
    best = std::min(best, max_flow(n, arcs, std::span<const std::int64_t>(cap), v, 0).value);
  }
  return static_cast<int>(best);
}

}  // namespace fos
