#pragma once

#include "fos/node_set.hpp"
#include "fos/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fos {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Undirected multigraph on nodes [0, n). Edge identity is positional, so
/// parallel edges are distinct.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(int n) : n_(n) {}
  UGraph(int n, std::vector<Edge> edges);

  int node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Throws InputError on self-loops or out-of-range endpoints.
  std::size_t add_edge(NodeId u, NodeId v);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Directed multigraph.
struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;
};

/// Mixed graph: directed arcs plus undirected edges, with separate identity spaces.
struct MixedGraph {
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<Edge> uedges;
};

inline bool crosses(const Edge& e, NodeSet s) { return s.contains(e.u) != s.contains(e.v); }
inline bool enters(const Arc& a, NodeSet s) { return s.contains(a.head) && !s.contains(a.tail); }

/// Σ weights over edges with exactly one endpoint in `s` (x(δ(S)) / d_F(S)).
Rat deg_cut(const UGraph& g, std::span<const Rat> weights, NodeSet s);
/// Unit-weight d(S).
int deg_cut(const UGraph& g, NodeSet s);

/// d_G(S,T): edges with one endpoint in S∖T and the other in T∖S.
int cross_pair(const UGraph& g, NodeSet s, NodeSet t);

/// Σ weights over arcs with head in `s` and tail outside.
Rat in_cut(std::span<const Arc> arcs, std::span<const Rat> weights, NodeSet s);
int in_degree(std::span<const Arc> arcs, NodeSet s);

template <class Cap>
struct FlowResult {
  Cap value{};
  NodeSet source_side;  ///< nodes reachable from s in the final residual graph
};

/// Exact s-t max flow (shortest augmenting paths) with a minimum-cut witness.
FlowResult<Rat> max_flow(int n, std::span<const Arc> arcs, std::span<const Rat> cap, NodeId s, NodeId t);
/// Integer-capacity variant; same algorithm.
FlowResult<std::int64_t> max_flow(int n, std::span<const Arc> arcs, std::span<const std::int64_t> cap, NodeId s,
                                  NodeId t);

/// Both orientations of every edge: arcs 2i and 2i+1 come from edge i.
std::vector<Arc> bidirect(const UGraph& g);

/// λ(G) = min over ∅⊂S⊂V of d(S), via n-1 unit-capacity max flows from node 0.
int edge_connectivity(const UGraph& g);

/// Min over ∅⊂S⊂V of the in-degree d^in(S) of a digraph (arc-strong connectivity),
/// via 2(n-1) max flows through node 0.
int arc_connectivity(int n, std::span<const Arc> arcs);

}  // namespace fos
