// Copyright 2026 The kpgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPGRAPH_CONNECTIVITY_HPP
#define KPGRAPH_CONNECTIVITY_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "kpgraph/graph.hpp"

namespace kpgraph {

/// Sentinel returned by the min_* scans when the graph is complete (no
/// non-adjacent pair exists to constrain them).
inline constexpr int kAllPairsAdjacent = std::numeric_limits<int>::max();

namespace detail {

/// Unit-capacity max-flow (Dinic) over a vertex-split digraph: every vertex
/// w becomes w_in -> w_out with capacity 1, and each admitted graph edge
/// (a, b) becomes a_out -> b_in (plus b_out -> a_in when undirected). The
/// u_out -> v_in max flow equals the number of internally vertex-disjoint
/// u-v paths through the admitted edges (Menger).
class VertexSplitFlow {
 public:
  explicit VertexSplitFlow(NodeId n) : head_(2 * static_cast<std::size_t>(n), -1) {
    for (NodeId w = 0; w < n; ++w) add_arc(in(w), out(w));
  }

  void add_edge_arc(NodeId a, NodeId b) { add_arc(out(a), in(b)); }

  /// Max flow from u_out to v_in, stopping early once `limit` is reached.
  int max_disjoint(NodeId u, NodeId v, int limit = std::numeric_limits<int>::max()) {
    reset();
    const int s = out(u), t = in(v);
    int flow = 0;
    while (flow < limit && build_levels(s, t)) {
      std::vector<int> iter = head_;
      while (flow < limit) {
        int pushed = augment(s, t, iter);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  static int in(NodeId w) { return static_cast<int>(2 * w); }
  static int out(NodeId w) { return static_cast<int>(2 * w + 1); }

  void add_arc(int from, int to) {
    arcs_.push_back({to, head_[from], 1});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  void reset() {
    // Forward arcs sit at even indices with unit capacity, residuals at odd.
    for (std::size_t i = 0; i < arcs_.size(); i += 2) {
      arcs_[i].cap = 1;
      arcs_[i + 1].cap = 0;
    }
  }

  bool build_levels(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int e = head_[x]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] == -1) {
          level_[arcs_[e].to] = level_[x] + 1;
          q.push(arcs_[e].to);
        }
      }
    }
    return level_[t] != -1;
  }

  int augment(int x, int t, std::vector<int>& iter) {
    if (x == t) return 1;
    for (int& e = iter[x]; e != -1; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[x] + 1) {
        if (augment(a.to, t, iter) > 0) {
          a.cap -= 1;
          arcs_[e ^ 1].cap += 1;
          return 1;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
};

inline VertexSplitFlow whole_graph_flow(const TGraph& g) {
  VertexSplitFlow flow(g.num_nodes());
  for (const auto& [a, b] : g.edges()) {
    flow.add_edge_arc(a, b);
    flow.add_edge_arc(b, a);
  }
  return flow;
}

}  // namespace detail

/// Maximum number of internally vertex-disjoint paths between two
/// non-adjacent vertices. Adjacent pairs are rejected: the direct edge makes
/// the internally-disjoint count unbounded by any vertex cut.
inline int vertex_disjoint_paths(const TGraph& g, NodeId u, NodeId v) {
  if (u == v) throw std::invalid_argument("vertex_disjoint_paths: u == v");
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("vertex_disjoint_paths: vertices are adjacent");
  }
  detail::VertexSplitFlow flow = detail::whole_graph_flow(g);
  return flow.max_disjoint(u, v);
}

/// Minimum of vertex_disjoint_paths over all non-adjacent pairs, i.e. the
/// vertex connectivity of a non-complete graph. Returns kAllPairsAdjacent
/// for complete graphs.
///
/// Runs the classic reduction: if a minimum cut S has size m, then among any
/// m+1 vertices at least one lies outside S and witnesses the minimum against
/// some non-adjacent partner. So scanning sources 0, 1, ... while
/// source_index <= current_min covers every minimum cut.
inline int min_disjoint_paths(const TGraph& g) {
  const NodeId n = g.num_nodes();
  if (n < 2) throw std::invalid_argument("min_disjoint_paths: need at least 2 nodes");
  detail::VertexSplitFlow flow = detail::whole_graph_flow(g);
  int best = kAllPairsAdjacent;
  for (NodeId u = 0; u < n; ++u) {
    if (static_cast<int>(u) > best) break;
    for (NodeId v = 0; v < n; ++v) {
      if (v == u || g.has_edge(u, v)) continue;
      best = std::min(best, flow.max_disjoint(u, v, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

/// True iff every non-adjacent pair has at least `f` disjoint paths. Flow
/// computations stop at f, so this is much cheaper than min_disjoint_paths
/// when f is small.
inline bool min_disjoint_paths_at_least(const TGraph& g, int f) {
  const NodeId n = g.num_nodes();
  if (n < 2) throw std::invalid_argument("min_disjoint_paths_at_least: need at least 2 nodes");
  if (f <= 0) return true;
  detail::VertexSplitFlow flow = detail::whole_graph_flow(g);
  for (NodeId u = 0; u < n && static_cast<int>(u) < f; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (v == u || g.has_edge(u, v)) continue;
      if (flow.max_disjoint(u, v, f) < f) return false;
    }
  }
  return true;
}

/// Maximum number of internally vertex-disjoint SHORTEST u-v paths: max flow
/// restricted to the BFS-layered DAG of edges lying on some shortest path.
/// Adjacent pairs return 1 (the edge is the unique shortest path); this is
/// the redundancy quantity behind shortest-path acquaintance chains.
inline int disjoint_shortest_paths(const TGraph& g, NodeId u, NodeId v) {
  if (u == v) throw std::invalid_argument("disjoint_shortest_paths: u == v");
  if (g.has_edge(u, v)) return 1;
  const std::vector<int> from_u = bfs_distances(g, u);
  if (from_u[v] == kUnreachable) return 0;
  const std::vector<int> from_v = bfs_distances(g, v);
  const int dist = from_u[v];

  detail::VertexSplitFlow flow(g.num_nodes());
  for (const auto& [a, b] : g.edges()) {
    if (from_u[a] == kUnreachable || from_v[b] == kUnreachable) continue;
    if (from_u[a] + 1 + from_v[b] == dist) flow.add_edge_arc(a, b);
    if (from_u[b] + 1 + from_v[a] == dist) flow.add_edge_arc(b, a);
  }
  return flow.max_disjoint(u, v);
}

/// Minimum of disjoint_shortest_paths over all non-adjacent pairs; the
/// largest f such that every non-adjacent pair keeps f vertex-disjoint
/// shortest acquaintance chains. kAllPairsAdjacent for complete graphs.
inline int min_disjoint_shortest_paths(const TGraph& g) {
  const NodeId n = g.num_nodes();
  if (n < 2) throw std::invalid_argument("min_disjoint_shortest_paths: need at least 2 nodes");
  int best = kAllPairsAdjacent;
  for (NodeId u = 0; u < n && best > 0; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      best = std::min(best, disjoint_shortest_paths(g, u, v));
      if (best == 0) break;
    }
  }
  return best;
}

}  // namespace kpgraph

#endif  // KPGRAPH_CONNECTIVITY_HPP
