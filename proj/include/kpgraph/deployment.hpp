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

#ifndef KPGRAPH_DEPLOYMENT_HPP
#define KPGRAPH_DEPLOYMENT_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "kpgraph/graph.hpp"
#include "kpgraph/rng.hpp"

namespace kpgraph {

/// Random physical connectivity model: a fraction p_die of nodes die before
/// deployment and every surviving pair is within radio range independently
/// with probability b/(n-1), so the unconditional pair-link probability is
/// p_link = (1-p_die)^2 * b/(n-1).
struct PhysicalModel {
  NodeId n = 0;
  double b = 0.0;       // mean neighbor count, dead nodes included
  double p_die = 0.0;   // in [0, 1]
  std::uint64_t seed = 0;

  double pair_probability() const { return b / static_cast<double>(n - 1); }

  double p_link() const { return (1.0 - p_die) * (1.0 - p_die) * pair_probability(); }

  void validate() const {
    if (n < 2) throw std::invalid_argument("PhysicalModel: need n >= 2");
    if (p_die < 0.0 || p_die > 1.0) {
      throw std::invalid_argument("PhysicalModel: p_die outside [0, 1]");
    }
    if (b < 0.0 || b > static_cast<double>(n - 1)) {
      throw std::invalid_argument("PhysicalModel: b outside [0, n-1]");
    }
  }
};

/// Sampled radio-connectivity graph. Dead nodes stay in the node universe
/// but carry no edges.
struct PhysicalGraph {
  std::vector<char> alive;
  TGraph graph;

  std::size_t alive_count() const {
    return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
  }
};

inline PhysicalGraph sample_physical(const PhysicalModel& model) {
  model.validate();
  Rng rng(model.seed);
  PhysicalGraph p;
  p.alive.assign(model.n, 1);
  for (NodeId v = 0; v < model.n; ++v) {
    if (rng.bernoulli(model.p_die)) p.alive[v] = 0;
  }
  p.graph = TGraph(model.n);
  const double q = model.pair_probability();
  for (NodeId u = 0; u < model.n; ++u) {
    if (!p.alive[u]) continue;
    for (NodeId v = u + 1; v < model.n; ++v) {
      if (!p.alive[v]) continue;
      if (rng.bernoulli(q)) p.graph.add_edge(u, v);
    }
  }
  return p;
}

/// One converted virtual edge: the acquaintance chain had `chain_length`
/// trusted hops, found during sweep `sweep` (1-based).
struct ChainConversion {
  Edge edge;
  int chain_length = 0;
  int sweep = 0;
};

/// Overlay of a trust graph and a physical graph. `trusted` are physical
/// links with preloaded mutual trust, `virtual_edges` the physical links
/// still lacking it, `established` those converted by path-key chains.
/// The three sets stay pairwise disjoint; trusted + virtual + established
/// always equals the alive part of E(G_P).
struct DeployedTGraph {
  NodeId n = 0;
  std::vector<char> alive;
  std::vector<Edge> trusted;
  std::vector<Edge> virtual_edges;
  std::vector<ChainConversion> established;
  TGraph trust_subgraph;  // trusted plus established edges
};

inline DeployedTGraph overlay(const TGraph& trust, const PhysicalGraph& physical) {
  if (trust.num_nodes() != physical.graph.num_nodes()) {
    throw std::invalid_argument("overlay: node universes differ");
  }
  DeployedTGraph d;
  d.n = trust.num_nodes();
  d.alive = physical.alive;
  d.trust_subgraph = TGraph(d.n);
  for (const auto& [u, v] : physical.graph.edges()) {
    if (trust.has_edge(u, v)) {
      d.trusted.emplace_back(u, v);
      d.trust_subgraph.add_edge(u, v);
    } else {
      d.virtual_edges.emplace_back(u, v);
    }
  }
  return d;
}

/// Energy accounting over a deployment's conversion history. W = chain
/// length + 1 per conversion; w_bar follows the per-pair average over
/// processed physical pairs (trusted links count with distance 1),
/// w_bar_conversions averages converted pairs only. Failed conversions
/// consume no protocol energy and are only counted.
struct EnergyReport {
  int w_max = 0;                   // max chain length + 1; 0 when nothing converted
  double w_bar = 0.0;              // 1 + mean establishment distance over processed pairs
  double w_bar_conversions = 0.0;  // 1 + mean chain length over conversions; 0 when none
  std::vector<int> chain_lengths;
  std::size_t converted = 0;
  std::size_t unconverted = 0;
};

namespace detail {

/// Shortest trusted-path length from u to v, capped at max_chain hops.
inline int bounded_trust_distance(const TGraph& g, NodeId u, NodeId v, std::size_t max_chain) {
  std::vector<int> dist(g.num_nodes(), kUnreachable);
  dist[u] = 0;
  std::queue<NodeId> frontier;
  frontier.push(u);
  while (!frontier.empty()) {
    NodeId x = frontier.front();
    frontier.pop();
    if (static_cast<std::size_t>(dist[x]) >= max_chain) continue;
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      frontier.push(y);
    }
  }
  return kUnreachable;
}

}  // namespace detail

/// Converts virtual edges into established trusted links via acquaintance
/// chains. Each sweep offers the remaining virtual edges in ascending
/// canonical order; a chain is a shortest path in the current trusted +
/// established subgraph (virtual edges never relay), and a conversion is
/// visible to later edges immediately. With iterate=true sweeps repeat until
/// a sweep converts nothing.
inline EnergyReport establish_path_keys(DeployedTGraph& d, std::size_t max_chain,
                                        bool iterate = true) {
  if (max_chain < 1) throw std::invalid_argument("establish_path_keys: need max_chain >= 1");

  int sweep = 0;
  bool progress = true;
  while (progress) {
    ++sweep;
    progress = false;
    std::vector<Edge> remaining;
    remaining.reserve(d.virtual_edges.size());
    for (const auto& edge : d.virtual_edges) {
      const auto& [u, v] = edge;
      const int len = detail::bounded_trust_distance(d.trust_subgraph, u, v, max_chain);
      if (len != kUnreachable) {
        d.established.push_back({edge, len, sweep});
        d.trust_subgraph.add_edge(u, v);
        progress = true;
      } else {
        remaining.push_back(edge);
      }
    }
    d.virtual_edges = std::move(remaining);
    if (!iterate) break;
  }

  EnergyReport report;
  report.converted = d.established.size();
  report.unconverted = d.virtual_edges.size();
  report.chain_lengths.reserve(d.established.size());
  long double chain_sum = 0.0L;
  int max_len = 0;
  for (const auto& conv : d.established) {
    report.chain_lengths.push_back(conv.chain_length);
    chain_sum += conv.chain_length;
    max_len = std::max(max_len, conv.chain_length);
  }
  report.w_max = report.converted == 0 ? 0 : max_len + 1;
  report.w_bar_conversions =
      report.converted == 0 ? 0.0 : 1.0 + static_cast<double>(chain_sum / report.converted);
  const std::size_t processed = d.trusted.size() + report.converted;
  report.w_bar = processed == 0 ? 0.0
                                : 1.0 + static_cast<double>((chain_sum + d.trusted.size()) /
                                                            processed);
  return report;
}

/// Monte Carlo estimate of p_c, the probability that a uniformly random node
/// pair is a trusted edge after overlay, next to the analytic value
/// p_link * |E(G_T)| / C(n, 2).
struct TrustedPairProbability {
  double estimate = 0.0;
  double analytic = 0.0;
  std::uint64_t pairs_sampled = 0;
};

inline TrustedPairProbability estimate_p_c(const TGraph& trust, const PhysicalModel& model,
                                           int trials) {
  if (trials < 1) throw std::invalid_argument("estimate_p_c: need trials >= 1");
  model.validate();
  if (trust.num_nodes() != model.n) throw std::invalid_argument("estimate_p_c: n mismatch");

  const std::uint64_t all_pairs =
      static_cast<std::uint64_t>(model.n) * (model.n - 1) / 2;
  std::uint64_t trusted_total = 0;
  for (int t = 0; t < trials; ++t) {
    PhysicalModel trial_model = model;
    trial_model.seed = derive_seed(model.seed, static_cast<std::uint64_t>(t), "p_c");
    const PhysicalGraph p = sample_physical(trial_model);
    for (const auto& [u, v] : p.graph.edges()) {
      if (trust.has_edge(u, v)) ++trusted_total;
    }
  }

  TrustedPairProbability out;
  out.pairs_sampled = all_pairs * static_cast<std::uint64_t>(trials);
  out.estimate = static_cast<double>(trusted_total) / static_cast<double>(out.pairs_sampled);
  out.analytic = model.p_link() * static_cast<double>(trust.num_edges()) /
                 static_cast<double>(all_pairs);
  return out;
}

/// Distance summary of the trusted + established subgraph induced on alive
/// nodes. Dead nodes are cut out entirely (they hold no usable links).
inline DistanceSummary deployed_metrics(const DeployedTGraph& d) {
  std::vector<NodeId> compact(d.n, 0);
  NodeId alive_count = 0;
  for (NodeId v = 0; v < d.n; ++v) {
    if (d.alive[v]) compact[v] = alive_count++;
  }
  if (alive_count < 2) {
    DistanceSummary summary;
    summary.connected = alive_count == 1;
    return summary;
  }
  TGraph induced(alive_count);
  for (const auto& [u, v] : d.trust_subgraph.edges()) {
    induced.add_edge(compact[u], compact[v]);
  }
  return distance_summary(induced);
}

/// Distances between physical-neighbor pairs, measured in the current
/// trusted + established subgraph. Pairs with no trusted path are tallied
/// separately instead of polluting the mean.
struct PhysicalPairStats {
  std::uint64_t pairs = 0;
  std::uint64_t finite_pairs = 0;
  std::uint64_t infinite_pairs = 0;
  double mean_finite = 0.0;
  int max_finite = 0;
};

inline PhysicalPairStats physical_pair_distances(const DeployedTGraph& d) {
  std::map<NodeId, std::vector<NodeId>> targets;
  auto add_pair = [&](const Edge& e) { targets[e.first].push_back(e.second); };
  for (const auto& e : d.trusted) add_pair(e);
  for (const auto& e : d.virtual_edges) add_pair(e);
  for (const auto& conv : d.established) add_pair(conv.edge);

  PhysicalPairStats stats;
  long double sum = 0.0L;
  for (const auto& [source, ends] : targets) {
    const std::vector<int> dist = bfs_distances(d.trust_subgraph, source);
    for (NodeId v : ends) {
      ++stats.pairs;
      if (dist[v] == kUnreachable) {
        ++stats.infinite_pairs;
      } else {
        ++stats.finite_pairs;
        sum += dist[v];
        stats.max_finite = std::max(stats.max_finite, dist[v]);
      }
    }
  }
  stats.mean_finite =
      stats.finite_pairs == 0 ? 0.0 : static_cast<double>(sum / stats.finite_pairs);
  return stats;
}

}  // namespace kpgraph

#endif  // KPGRAPH_DEPLOYMENT_HPP
