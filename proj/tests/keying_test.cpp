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

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <sstream>

#include "kpgraph/constructions.hpp"
#include "kpgraph/keying.hpp"

namespace kpgraph {
namespace {

TGraph star_graph(NodeId leaves) {
  TGraph g(leaves + 1);
  for (NodeId leaf = 1; leaf <= leaves; ++leaf) g.add_edge(0, leaf);
  return g;
}

/// 2k-regular ring lattice on n nodes: i adjacent to i +- 1..k (mod n).
TGraph circulant_graph(NodeId n, NodeId k) {
  TGraph g(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId d = 1; d <= k; ++d) g.add_edge(i, (i + d) % n);
  }
  return g;
}

void check_key_invariants(const KeyGraph& k) {
  // Exactly one key per edge, and the owners map is the exact inverse.
  ASSERT_EQ(k.edge_key.size(), k.edge_list.size());
  std::size_t labeled = 0;
  for (KeyId key = 0; key < k.key_count; ++key) {
    for (std::uint32_t idx : k.key_edges[key]) {
      ASSERT_LT(idx, k.edge_list.size());
      EXPECT_EQ(k.edge_key[idx], key);
      const auto& [u, v] = k.edge_list[idx];
      EXPECT_TRUE(u == k.key_owner[key] || v == k.key_owner[key]);
      ++labeled;
    }
    EXPECT_LE(k.key_edges[key].size(), static_cast<std::size_t>(k.reuse_limit));
  }
  EXPECT_EQ(labeled, k.edge_list.size());

  // Reuse cap per node: a key appears on at most g edges incident to any
  // single node.
  std::map<std::pair<NodeId, KeyId>, int> multiplicity;
  for (std::uint32_t i = 0; i < k.edge_list.size(); ++i) {
    const auto& [u, v] = k.edge_list[i];
    ++multiplicity[{u, k.edge_key[i]}];
    ++multiplicity[{v, k.edge_key[i]}];
  }
  for (const auto& [node_key, count] : multiplicity) {
    EXPECT_LE(count, k.reuse_limit);
  }
}

TEST(AssignDistinctTest, CompleteGraph) {
  const KeyGraph k = assign_distinct(build_complete(4));
  const StorageProfile p = storage_profile(k);
  EXPECT_EQ(p.total_keys, 6u);
  for (std::uint32_t l : p.per_node) EXPECT_EQ(l, 3u);
  check_key_invariants(k);
}

TEST(AssignDistinctTest, EmptyGraph) {
  const KeyGraph k = assign_distinct(TGraph(3));
  const StorageProfile p = storage_profile(k);
  EXPECT_EQ(p.total_keys, 0u);
  EXPECT_EQ(p.per_node, (std::vector<std::uint32_t>{0, 0, 0}));
}

TEST(AssignDistinctTest, DeBruijnStorageEqualsDegrees) {
  const TGraph g = build_de_bruijn(2, 3);
  const KeyGraph k = assign_distinct(g);
  const StorageProfile p = storage_profile(k);
  EXPECT_EQ(p.total_keys, 13u);  // |E| of the simple binary de Bruijn graph
  for (NodeId v = 0; v < g.num_nodes(); ++v) EXPECT_EQ(p.per_node[v], g.degree(v));
}

TEST(AssignReusedTest, ReuseOneMatchesDistinct) {
  const TGraph g = build_random_gnp(20, 0.3, 4);
  const KeyGraph reused = assign_reused(g, 1, 9);
  const KeyGraph distinct = assign_distinct(g);
  const StorageProfile a = storage_profile(reused);
  const StorageProfile b = storage_profile(distinct);
  EXPECT_EQ(a.total_keys, b.total_keys);
  EXPECT_EQ(a.per_node, b.per_node);
  check_key_invariants(reused);
}

TEST(AssignReusedTest, StarHubSharesKeys) {
  const KeyGraph k = assign_reused(star_graph(8), 4, 0);
  const StorageProfile p = storage_profile(k);
  EXPECT_EQ(p.per_node[0], 2u);  // 8 edges grouped into two keys of four
  for (NodeId leaf = 1; leaf <= 8; ++leaf) EXPECT_EQ(p.per_node[leaf], 1u);
  EXPECT_EQ(p.total_keys, 2u);
  check_key_invariants(k);
}

TEST(AssignReusedTest, FullReuseAtOwnerKeepsOneKey) {
  const KeyGraph k = assign_reused(star_graph(5), 5, 1);
  const StorageProfile p = storage_profile(k);
  EXPECT_EQ(p.per_node[0], 1u);
  EXPECT_EQ(p.total_keys, 1u);
}

TEST(AssignReusedTest, StorageCountsNeighborOwnedKeys) {
  // Path 0-1-2: edge (0,1) is owned by 0, edge (1,2) by 1. Node 1 stores
  // both keys even with reuse available.
  TGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const KeyGraph k = assign_reused(g, 2, 0);
  const StorageProfile p = storage_profile(k);
  EXPECT_EQ(p.per_node[1], 2u);
  EXPECT_EQ(p.total_keys, 2u);
}

TEST(AssignReusedTest, PigeonholeOnTotalKeys) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const TGraph g = build_random_gnp(30, 0.25, seed + 50);
    for (int reuse : {1, 2, 3, 5}) {
      const KeyGraph k = assign_reused(g, reuse, seed);
      const StorageProfile p = storage_profile(k);
      const std::size_t min_keys = (g.num_edges() + reuse - 1) / reuse;
      EXPECT_GE(p.total_keys, min_keys);
      check_key_invariants(k);
    }
  }
}

TEST(AssignReusedTest, EveryKeyKnownToAtLeastTwoNodes) {
  const TGraph g = build_random_gnp(25, 0.3, 12);
  for (int reuse : {1, 3, 6}) {
    const KeyGraph k = assign_reused(g, reuse, 77);
    const StorageProfile p = storage_profile(k);
    const std::uint64_t total =
        std::accumulate(p.per_node.begin(), p.per_node.end(), std::uint64_t{0});
    EXPECT_GE(total, 2 * static_cast<std::uint64_t>(p.total_keys));
  }
}

TEST(AssignReusedTest, DeterministicPerSeed) {
  const TGraph g = build_random_gnp(20, 0.3, 8);
  EXPECT_EQ(assign_reused(g, 3, 5).edge_key, assign_reused(g, 3, 5).edge_key);
  EXPECT_THROW(assign_reused(g, 0, 5), std::invalid_argument);
}

TEST(CompromiseTest, DistinctKeysAffectExactlyIncidentEdges) {
  const TGraph g = build_random_gnp(18, 0.35, 21);
  const KeyGraph k = assign_distinct(g);
  for (NodeId victim = 0; victim < g.num_nodes(); ++victim) {
    const CompromiseReport r = simulate_compromise(k, {victim});
    EXPECT_EQ(r.affected_edges, g.degree(victim));
    EXPECT_DOUBLE_EQ(r.fraction,
                     static_cast<double>(g.degree(victim)) / static_cast<double>(g.num_edges()));
  }
}

TEST(CompromiseTest, AllVictimsAffectEverything) {
  const TGraph g = build_random_gnp(15, 0.4, 2);
  const KeyGraph k = assign_reused(g, 3, 6);
  std::vector<NodeId> everyone(g.num_nodes());
  std::iota(everyone.begin(), everyone.end(), 0);
  const CompromiseReport r = simulate_compromise(k, everyone);
  EXPECT_DOUBLE_EQ(r.fraction, 1.0);
}

TEST(CompromiseTest, BoundHoldsAcrossSeedsOnRegularGraphs) {
  // Tight case: the 12-regular diameter-2 family on 25 nodes; loose case:
  // an 8-regular ring on 100 nodes.
  const TGraph tight = build_de_bruijn_variant(moment_curve_basis(5, 2, 3));
  const TGraph ring = circulant_graph(100, 4);
  for (const TGraph* g : {&tight, &ring}) {
    const DistanceSummary s = distance_summary(*g);
    ASSERT_TRUE(s.connected);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const KeyGraph k = assign_reused(*g, 3, seed);
      Rng rng(derive_seed(seed, 0, "victim"));
      const NodeId victim = static_cast<NodeId>(rng.next_below(g->num_nodes()));
      const CompromiseReport r = simulate_compromise(k, {victim}, s.diameter);
      ASSERT_TRUE(r.bound.has_value());
      EXPECT_LE(r.fraction, *r.bound) << "seed " << seed;
      EXPECT_TRUE(r.bound_holds.value());
    }
  }
}

TEST(CompromiseTest, MultiVictimBoundIsScaledAndLoose) {
  const TGraph g = build_de_bruijn_variant(moment_curve_basis(5, 2, 3));
  const KeyGraph k = assign_reused(g, 3, 1);
  const CompromiseReport single = simulate_compromise(k, {0}, 2);
  const CompromiseReport multi = simulate_compromise(k, {0, 7, 13}, 2);
  ASSERT_TRUE(single.bound.has_value());
  ASSERT_TRUE(multi.bound.has_value());
  EXPECT_FALSE(single.bound_loose);
  EXPECT_TRUE(multi.bound_loose);
  EXPECT_NEAR(*multi.bound, 3.0 * *single.bound, 1e-12);
}

TEST(CompromiseTest, ValidatesVictims) {
  const KeyGraph k = assign_distinct(build_complete(4));
  EXPECT_THROW(simulate_compromise(k, {}), std::invalid_argument);
  EXPECT_THROW(simulate_compromise(k, {9}), std::out_of_range);
}

TEST(CompromiseTest, NoBoundAttachedForSingleUseKeys) {
  const KeyGraph k = assign_distinct(build_complete(5));
  const CompromiseReport r = simulate_compromise(k, {0}, 1);
  EXPECT_FALSE(r.bound.has_value());
  EXPECT_FALSE(r.bound_holds.has_value());
  EXPECT_DOUBLE_EQ(r.fraction, 4.0 / 10.0);
}

TEST(CompromiseTest, JsonCarriesContractFields) {
  const KeyGraph k = assign_reused(build_complete(6), 2, 3);
  const CompromiseReport r = simulate_compromise(k, {2}, 1);
  const nlohmann::json j = to_json(r);
  for (const char* field : {"victims", "revealed_keys", "affected_edges", "edge_count",
                            "fraction", "bound", "bound_holds", "bound_loose"}) {
    EXPECT_TRUE(j.contains(field)) << field;
  }
}

TEST(KeyGraphIoTest, RoundTripPreservesLabels) {
  const TGraph g = build_random_gnp(16, 0.3, 13);
  const KeyGraph k = assign_reused(g, 3, 31);
  std::ostringstream out;
  save_key_graph(k, out);
  std::istringstream in(out.str());
  const KeyGraph loaded = load_key_graph(in);
  EXPECT_EQ(loaded.graph, k.graph);
  EXPECT_EQ(loaded.edge_key, k.edge_key);
  EXPECT_EQ(loaded.reuse_limit, k.reuse_limit);
  EXPECT_EQ(loaded.key_owner, k.key_owner);
  check_key_invariants(loaded);
}

TEST(KeyGraphIoTest, RejectsKeysWithNoCommonNode) {
  std::istringstream in("n 4\n0 1 0\n2 3 0\n");
  EXPECT_THROW(load_key_graph(in), std::runtime_error);
}

}  // namespace
}  // namespace kpgraph
