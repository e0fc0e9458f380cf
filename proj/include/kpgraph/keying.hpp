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

#ifndef KPGRAPH_KEYING_HPP
#define KPGRAPH_KEYING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "kpgraph/bounds.hpp"
#include "kpgraph/graph.hpp"
#include "kpgraph/rng.hpp"

namespace kpgraph {

using KeyId = std::uint32_t;

/// Edge-labeled trust graph: every edge carries exactly one key id. A key
/// labels at most `reuse_limit` edges, all incident to the key's owner node.
struct KeyGraph {
  TGraph graph;
  int reuse_limit = 1;  // g
  std::vector<Edge> edge_list;        // canonical ascending order
  std::vector<KeyId> edge_key;        // parallel to edge_list
  KeyId key_count = 0;
  std::vector<NodeId> key_owner;                 // per key
  std::vector<std::vector<std::uint32_t>> key_edges;  // key -> edge indices
};

/// One distinct key per edge: l(s_i) = deg(s_i), L = |E|.
inline KeyGraph assign_distinct(const TGraph& g) {
  KeyGraph k;
  k.graph = g;
  k.reuse_limit = 1;
  k.edge_list = g.edges();
  k.edge_key.resize(k.edge_list.size());
  k.key_count = static_cast<KeyId>(k.edge_list.size());
  k.key_owner.resize(k.key_count);
  k.key_edges.resize(k.key_count);
  for (std::uint32_t i = 0; i < k.edge_list.size(); ++i) {
    k.edge_key[i] = i;
    k.key_owner[i] = k.edge_list[i].first;
    k.key_edges[i] = {i};
  }
  return k;
}

/// Key reuse up to g edges per key: each edge is owned by its lower endpoint;
/// an owner's edges are grouped into classes of at most g, one key per class.
/// Grouping within an owner is a seeded shuffle, so different seeds explore
/// different partitions while staying reproducible.
inline KeyGraph assign_reused(const TGraph& g, int reuse_limit, std::uint64_t seed) {
  if (reuse_limit <= 0) throw std::invalid_argument("assign_reused: need g >= 1");
  KeyGraph k;
  k.graph = g;
  k.reuse_limit = reuse_limit;
  k.edge_list = g.edges();
  k.edge_key.assign(k.edge_list.size(), 0);

  std::vector<std::vector<std::uint32_t>> owned(g.num_nodes());
  for (std::uint32_t i = 0; i < k.edge_list.size(); ++i) {
    owned[k.edge_list[i].first].push_back(i);
  }

  for (NodeId owner = 0; owner < g.num_nodes(); ++owner) {
    auto& edges = owned[owner];
    if (edges.empty()) continue;
    Rng rng(derive_seed(seed, owner, "key-class"));
    rng.shuffle(edges);
    for (std::size_t start = 0; start < edges.size(); start += reuse_limit) {
      const KeyId key = k.key_count++;
      k.key_owner.push_back(owner);
      k.key_edges.emplace_back();
      const std::size_t stop = std::min(edges.size(), start + reuse_limit);
      for (std::size_t i = start; i < stop; ++i) {
        k.edge_key[edges[i]] = key;
        k.key_edges[key].push_back(edges[i]);
      }
    }
  }
  for (auto& cls : k.key_edges) std::sort(cls.begin(), cls.end());
  return k;
}

struct StorageProfile {
  std::vector<std::uint32_t> per_node;  // l(s_i): distinct keys on incident edges
  KeyId total_keys = 0;                 // L
};

inline StorageProfile storage_profile(const KeyGraph& k) {
  StorageProfile p;
  p.per_node.assign(k.graph.num_nodes(), 0);
  p.total_keys = static_cast<KeyId>(
      std::set<KeyId>(k.edge_key.begin(), k.edge_key.end()).size());
  std::vector<std::set<KeyId>> seen(k.graph.num_nodes());
  for (std::uint32_t i = 0; i < k.edge_list.size(); ++i) {
    const auto& [u, v] = k.edge_list[i];
    seen[u].insert(k.edge_key[i]);
    seen[v].insert(k.edge_key[i]);
  }
  for (NodeId u = 0; u < k.graph.num_nodes(); ++u) {
    p.per_node[u] = static_cast<std::uint32_t>(seen[u].size());
  }
  return p;
}

struct CompromiseReport {
  std::vector<NodeId> victims;
  std::uint64_t revealed_keys = 0;
  std::uint64_t affected_edges = 0;
  std::uint64_t edge_count = 0;
  double fraction = 0.0;  // p_compromise = affected / |E|
  std::optional<double> bound;  // analytic upper bound, when evaluable
  bool bound_loose = false;     // multi-victim bound scaled by |victims|
  std::optional<bool> bound_holds;
};

/// Reveals every key labeling an edge incident to a victim and counts the
/// edges sharing those keys. The analytic bound needs the trust graph's
/// diameter; pass it when known (it is not recomputed here).
inline CompromiseReport simulate_compromise(const KeyGraph& k, const std::vector<NodeId>& victims,
                                            std::optional<int> diameter = std::nullopt) {
  if (victims.empty()) throw std::invalid_argument("simulate_compromise: no victims");
  for (NodeId v : victims) {
    if (v >= k.graph.num_nodes()) {
      throw std::out_of_range("simulate_compromise: victim out of range");
    }
  }
  std::vector<char> is_victim(k.graph.num_nodes(), 0);
  for (NodeId v : victims) is_victim[v] = 1;

  std::vector<char> revealed(k.key_count, 0);
  for (std::uint32_t i = 0; i < k.edge_list.size(); ++i) {
    const auto& [u, v] = k.edge_list[i];
    if (is_victim[u] || is_victim[v]) revealed[k.edge_key[i]] = 1;
  }

  CompromiseReport report;
  report.victims = victims;
  std::sort(report.victims.begin(), report.victims.end());
  report.victims.erase(std::unique(report.victims.begin(), report.victims.end()),
                       report.victims.end());
  report.edge_count = k.edge_list.size();
  for (KeyId key = 0; key < k.key_count; ++key) {
    if (!revealed[key]) continue;
    ++report.revealed_keys;
    report.affected_edges += k.key_edges[key].size();
  }
  report.fraction = report.edge_count == 0
                        ? 0.0
                        : static_cast<double>(report.affected_edges) / report.edge_count;

  // The cascade bound needs actual reuse: at g = 1 a victim leaks exactly
  // its incident edges and the bound's edge-halving undercounts that, so no
  // bound is attached for single-use keys.
  if (diameter && k.reuse_limit >= 2 && !k.edge_list.empty()) {
    const DegreeStats stats = degree_stats(k.graph);
    if (stats.theta_min >= 1) {
      double single = bounds::compromise_fraction_bound(
          k.graph.num_nodes(), *diameter, static_cast<int>(stats.theta_min),
          static_cast<int>(stats.theta_max), k.reuse_limit);
      if (report.victims.size() > 1) {
        report.bound = single * static_cast<double>(report.victims.size());
        report.bound_loose = true;
      } else {
        report.bound = single;
      }
      report.bound_holds = report.fraction <= *report.bound;
    }
  }
  return report;
}

inline nlohmann::json to_json(const CompromiseReport& r) {
  nlohmann::json j{{"victims", r.victims},
                   {"revealed_keys", r.revealed_keys},
                   {"affected_edges", r.affected_edges},
                   {"edge_count", r.edge_count},
                   {"fraction", r.fraction},
                   {"bound_loose", r.bound_loose}};
  j["bound"] = r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr);
  j["bound_holds"] = r.bound_holds ? nlohmann::json(*r.bound_holds) : nlohmann::json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Labeled edge-list format: `u v key_id` lines after the `n <count>` header.
// The reuse limit is carried in a `# g = <g>` comment.
// ---------------------------------------------------------------------------

inline void save_key_graph(const KeyGraph& k, std::ostream& out) {
  out << "# g = " << k.reuse_limit << '\n';
  out << "n " << k.graph.num_nodes() << '\n';
  for (std::uint32_t i = 0; i < k.edge_list.size(); ++i) {
    out << k.edge_list[i].first << ' ' << k.edge_list[i].second << ' ' << k.edge_key[i] << '\n';
  }
}

inline KeyGraph load_key_graph(std::istream& in) {
  std::string line;
  bool have_header = false;
  NodeId n = 0;
  int reuse_limit = 0;
  std::vector<Edge> edges;
  std::vector<KeyId> keys;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream cs(line.substr(1));
      std::string key, eq;
      long long value = 0;
      if (cs >> key >> eq >> value && key == "g" && eq == "=") {
        reuse_limit = static_cast<int>(value);
      }
      continue;
    }
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      unsigned long long count = 0;
      if (!(ls >> tag >> count) || tag != "n") {
        throw std::runtime_error("key graph line " + std::to_string(lineno) +
                                 ": expected header 'n <count>'");
      }
      n = static_cast<NodeId>(count);
      have_header = true;
      continue;
    }
    unsigned long long u = 0, v = 0, key = 0;
    if (!(ls >> u >> v >> key)) {
      throw std::runtime_error("key graph line " + std::to_string(lineno) +
                               ": expected 'u v key_id'");
    }
    if (u >= n || v >= n) {
      throw std::runtime_error("key graph line " + std::to_string(lineno) +
                               ": node id out of range");
    }
    edges.push_back(make_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)));
    keys.push_back(static_cast<KeyId>(key));
  }
  if (!have_header) throw std::runtime_error("key graph: missing 'n <count>' header");

  KeyGraph k;
  k.graph = TGraph::from_edges(n, edges);
  k.edge_list = k.graph.edges();
  if (k.edge_list.size() != edges.size()) {
    throw std::runtime_error("key graph: duplicate edges in file");
  }
  k.edge_key.assign(k.edge_list.size(), 0);
  KeyId max_key = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto it = std::lower_bound(k.edge_list.begin(), k.edge_list.end(), edges[i]);
    k.edge_key[static_cast<std::size_t>(it - k.edge_list.begin())] = keys[i];
    max_key = std::max(max_key, keys[i]);
  }
  k.key_count = edges.empty() ? 0 : max_key + 1;
  k.key_edges.assign(k.key_count, {});
  for (std::uint32_t i = 0; i < k.edge_list.size(); ++i) {
    k.key_edges[k.edge_key[i]].push_back(i);
  }

  // Recover each key's owner: the node every labeled edge is incident to.
  k.key_owner.assign(k.key_count, 0);
  std::size_t largest_class = 1;
  for (KeyId key = 0; key < k.key_count; ++key) {
    const auto& cls = k.key_edges[key];
    if (cls.empty()) continue;
    largest_class = std::max(largest_class, cls.size());
    NodeId a = k.edge_list[cls[0]].first;
    NodeId b = k.edge_list[cls[0]].second;
    bool a_ok = true, b_ok = true;
    for (std::uint32_t idx : cls) {
      const auto& [u, v] = k.edge_list[idx];
      a_ok = a_ok && (u == a || v == a);
      b_ok = b_ok && (u == b || v == b);
    }
    if (!a_ok && !b_ok) {
      throw std::runtime_error("key graph: key " + std::to_string(key) +
                               " labels edges with no common node");
    }
    k.key_owner[key] = a_ok ? a : b;
  }
  k.reuse_limit = reuse_limit > 0 ? reuse_limit : static_cast<int>(largest_class);
  return k;
}

}  // namespace kpgraph

#endif  // KPGRAPH_KEYING_HPP
