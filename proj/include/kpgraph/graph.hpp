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

#ifndef KPGRAPH_GRAPH_HPP
#define KPGRAPH_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kpgraph/rng.hpp"

namespace kpgraph {

using NodeId = std::uint32_t;

/// Canonical undirected edge: first < second.
using Edge = std::pair<NodeId, NodeId>;

/// Distance sentinel for unreachable vertices.
inline constexpr int kUnreachable = -1;

inline Edge make_edge(NodeId u, NodeId v) {
  if (u == v) throw std::invalid_argument("make_edge: self-loops are not allowed");
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected trust graph over a dense node universe [0, n).
/// Adjacency lists are kept sorted, so iteration order (and everything
/// derived from it, including RNG-seeded experiments) is deterministic.
class TGraph {
 public:
  TGraph() = default;

  explicit TGraph(NodeId n) : n_(n), adj_(n) {}

  /// Builds from an edge list. Self-loops are rejected, duplicates merged.
  static TGraph from_edges(NodeId n, const std::vector<Edge>& edges) {
    TGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  NodeId num_nodes() const { return n_; }

  std::size_t num_edges() const { return edge_count_; }

  NodeId degree(NodeId u) const {
    check_node(u);
    return static_cast<NodeId>(adj_[u].size());
  }

  std::span<const NodeId> neighbors(NodeId u) const {
    check_node(u);
    return adj_[u];
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// Inserts the edge; returns false if it was already present.
  bool add_edge(NodeId u, NodeId v) {
    auto [lo, hi] = make_edge(u, v);
    check_node(hi);
    auto& a = adj_[lo];
    auto it = std::lower_bound(a.begin(), a.end(), hi);
    if (it != a.end() && *it == hi) return false;
    a.insert(it, hi);
    auto& b = adj_[hi];
    b.insert(std::lower_bound(b.begin(), b.end(), lo), lo);
    ++edge_count_;
    return true;
  }

  /// Removes the edge; returns false if it was absent.
  bool remove_edge(NodeId u, NodeId v) {
    auto [lo, hi] = make_edge(u, v);
    check_node(hi);
    auto& a = adj_[lo];
    auto it = std::lower_bound(a.begin(), a.end(), hi);
    if (it == a.end() || *it != hi) return false;
    a.erase(it);
    auto& b = adj_[hi];
    b.erase(std::lower_bound(b.begin(), b.end(), lo));
    --edge_count_;
    return true;
  }

  /// All edges in canonical ascending (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < n_; ++u) {
      for (NodeId v : adj_[u]) {
        if (v > u) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const TGraph& other) const = default;

 private:
  void check_node(NodeId u) const {
    if (u >= n_) {
      throw std::out_of_range("TGraph: node " + std::to_string(u) + " out of range [0, " +
                              std::to_string(n_) + ")");
    }
  }

  NodeId n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<NodeId>> adj_;
};

struct DegreeStats {
  NodeId theta_min = 0;
  NodeId theta_max = 0;
  std::size_t edge_count = 0;
};

inline DegreeStats degree_stats(const TGraph& g) {
  if (g.num_nodes() == 0) throw std::invalid_argument("degree_stats: empty graph");
  DegreeStats s;
  s.theta_min = std::numeric_limits<NodeId>::max();
  s.theta_max = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    NodeId d = g.degree(u);
    s.theta_min = std::min(s.theta_min, d);
    s.theta_max = std::max(s.theta_max, d);
  }
  s.edge_count = g.num_edges();
  return s;
}

/// Single-source shortest hop counts; kUnreachable marks disconnected targets.
inline std::vector<int> bfs_distances(const TGraph& g, NodeId source) {
  if (source >= g.num_nodes()) throw std::out_of_range("bfs_distances: source out of range");
  std::vector<int> dist(g.num_nodes(), kUnreachable);
  dist[source] = 0;
  std::queue<NodeId> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    NodeId u = frontier.front();
    frontier.pop();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

/// Source sampling for approximate distance summaries on large graphs.
struct SampledSources {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/// Hop-distance summary. When the graph is disconnected, `diameter` and
/// `mean_distance` keep their sentinels and the finite_* fields carry the
/// statistics over reachable pairs only.
struct DistanceSummary {
  bool connected = false;
  bool estimated = false;  // true when computed from sampled sources
  int diameter = kUnreachable;
  double mean_distance = -1.0;
  std::vector<int> eccentricities;  // max finite distance per source (kUnreachable if unsampled)

  std::uint64_t finite_pairs = 0;  // unordered pairs with a finite distance
  int finite_diameter = 0;
  double finite_mean = 0.0;
};

/// All-pairs (or sampled-source) distance summary. The mean is taken over
/// unordered pairs with divisor n(n-1)/2; sampling averages source rows
/// instead and flags the result as an estimate.
inline DistanceSummary distance_summary(const TGraph& g,
                                        std::optional<SampledSources> sampling = std::nullopt) {
  const NodeId n = g.num_nodes();
  if (n < 2) throw std::invalid_argument("distance_summary: need at least 2 nodes");

  DistanceSummary out;
  out.eccentricities.assign(n, kUnreachable);

  // Connectivity is always exact: one BFS.
  {
    std::vector<int> d0 = bfs_distances(g, 0);
    out.connected = std::none_of(d0.begin(), d0.end(), [](int d) { return d == kUnreachable; });
  }

  std::vector<NodeId> sources;
  bool estimated = false;
  if (sampling && sampling->count < n) {
    if (sampling->count == 0) throw std::invalid_argument("distance_summary: zero sample size");
    Rng rng(sampling->seed);
    for (std::uint64_t s : rng.sample_without_replacement(n, sampling->count)) {
      sources.push_back(static_cast<NodeId>(s));
    }
    std::sort(sources.begin(), sources.end());
    estimated = true;
  } else {
    sources.resize(n);
    for (NodeId u = 0; u < n; ++u) sources[u] = u;
  }

  std::uint64_t finite_ordered = 0;
  long double finite_sum = 0.0L;
  int max_finite = 0;
  for (NodeId s : sources) {
    std::vector<int> dist = bfs_distances(g, s);
    int ecc = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (v == s) continue;
      int d = dist[v];
      if (d == kUnreachable) continue;
      ecc = std::max(ecc, d);
      ++finite_ordered;
      finite_sum += d;
    }
    out.eccentricities[s] = ecc;
    max_finite = std::max(max_finite, ecc);
  }

  out.estimated = estimated;
  out.finite_diameter = max_finite;
  if (estimated) {
    // Each sampled source contributes its full distance row; the row mean
    // is an unbiased estimate of the pair mean.
    out.finite_pairs = finite_ordered;  // ordered source->target counts
    out.finite_mean = finite_ordered == 0 ? 0.0 : static_cast<double>(finite_sum / finite_ordered);
  } else {
    out.finite_pairs = finite_ordered / 2;
    out.finite_mean =
        finite_ordered == 0 ? 0.0 : static_cast<double>(finite_sum / finite_ordered);
  }

  if (out.connected) {
    out.diameter = out.finite_diameter;
    out.mean_distance = out.finite_mean;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text format: optional '#' comment lines, then a header line
// `n <count>`, then one `u v` line per edge with u < v in ascending order.
// save(load(x)) is byte-stable for canonical comment-free input.
// ---------------------------------------------------------------------------

inline void save_edge_list(const TGraph& g, std::ostream& out,
                           std::span<const std::string> header_comments = {}) {
  for (const auto& c : header_comments) out << "# " << c << '\n';
  out << "n " << g.num_nodes() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void save_edge_list(const TGraph& g, const std::filesystem::path& path,
                           std::span<const std::string> header_comments = {}) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_edge_list: cannot open " + path.string());
  save_edge_list(g, out, header_comments);
}

inline TGraph load_edge_list(std::istream& in) {
  std::string line;
  bool have_header = false;
  NodeId n = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      unsigned long long count = 0;
      if (!(ls >> tag >> count) || tag != "n") {
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": expected header 'n <count>'");
      }
      if (count > std::numeric_limits<NodeId>::max()) {
        throw std::runtime_error("edge list: node count too large");
      }
      n = static_cast<NodeId>(count);
      have_header = true;
      continue;
    }
    unsigned long long u = 0, v = 0;
    if (!(ls >> u >> v)) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": expected 'u v' pair");
    }
    if (u >= n || v >= n) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": node id out of range");
    }
    edges.push_back(make_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)));
  }
  if (!have_header) throw std::runtime_error("edge list: missing 'n <count>' header");
  return TGraph::from_edges(n, edges);
}

inline TGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_edge_list: cannot open " + path.string());
  return load_edge_list(in);
}

}  // namespace kpgraph

#endif  // KPGRAPH_GRAPH_HPP
