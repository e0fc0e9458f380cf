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

#include <set>
#include <sstream>

#include "kpgraph/connectivity.hpp"
#include "kpgraph/constructions.hpp"
#include "kpgraph/graph.hpp"
#include "oracles.hpp"

namespace kpgraph {
namespace {

TGraph path_graph(NodeId n) {
  TGraph g(n);
  for (NodeId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

TGraph cycle_graph(NodeId n) {
  TGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

TEST(TGraphTest, RejectsSelfLoopsAndDuplicates) {
  TGraph g(4);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));  // same undirected edge
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(TGraphTest, EdgeCountMatchesDegreeSum) {
  const TGraph g = build_random_gnp(40, 0.2, 7);
  std::size_t degree_sum = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) degree_sum += g.degree(u);
  EXPECT_EQ(degree_sum, 2 * g.num_edges());
}

TEST(DegreeStatsTest, CompleteGraph) {
  const DegreeStats s = degree_stats(build_complete(4));
  EXPECT_EQ(s.theta_min, 3u);
  EXPECT_EQ(s.theta_max, 3u);
  EXPECT_EQ(s.edge_count, 6u);
}

TEST(DegreeStatsTest, PathGraph) {
  const DegreeStats s = degree_stats(path_graph(3));
  EXPECT_EQ(s.theta_min, 1u);
  EXPECT_EQ(s.theta_max, 2u);
  EXPECT_EQ(s.edge_count, 2u);
}

TEST(BfsTest, Triangle) {
  const std::vector<int> d = bfs_distances(build_complete(3), 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, 1}));
}

TEST(BfsTest, Path) {
  const std::vector<int> d = bfs_distances(path_graph(3), 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, 2}));
}

TEST(BfsTest, DisconnectedUsesSentinel) {
  TGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const std::vector<int> d = bfs_distances(g, 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, kUnreachable, kUnreachable}));
}

TEST(DistanceSummaryTest, CompleteGraph) {
  const DistanceSummary s = distance_summary(build_complete(5));
  EXPECT_TRUE(s.connected);
  EXPECT_EQ(s.diameter, 1);
  EXPECT_DOUBLE_EQ(s.mean_distance, 1.0);
}

TEST(DistanceSummaryTest, SixCycle) {
  const DistanceSummary s = distance_summary(cycle_graph(6));
  EXPECT_TRUE(s.connected);
  EXPECT_EQ(s.diameter, 3);
  // 6 pairs at distance 1, 6 at 2, 3 at 3 over 15 pairs.
  EXPECT_DOUBLE_EQ(s.mean_distance, 1.8);
}

TEST(DistanceSummaryTest, DisconnectedReportsFinitePairs) {
  TGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const DistanceSummary s = distance_summary(g);
  EXPECT_FALSE(s.connected);
  EXPECT_EQ(s.diameter, kUnreachable);
  EXPECT_EQ(s.mean_distance, -1.0);
  EXPECT_EQ(s.finite_pairs, 2u);
  EXPECT_EQ(s.finite_diameter, 1);
  EXPECT_DOUBLE_EQ(s.finite_mean, 1.0);
}

TEST(DistanceSummaryTest, MeanWithinDiameterBounds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TGraph g = build_random_gnp(30, 0.3, seed);
    const DistanceSummary s = distance_summary(g);
    if (!s.connected) continue;
    EXPECT_GE(s.mean_distance, 1.0);
    EXPECT_LE(s.mean_distance, s.diameter);
  }
}

TEST(DistanceSummaryTest, SampledSourcesAreFlaggedEstimates) {
  const TGraph g = build_random_gnp(60, 0.2, 3);
  const DistanceSummary exact = distance_summary(g);
  const DistanceSummary sampled = distance_summary(g, SampledSources{10, 42});
  EXPECT_TRUE(sampled.estimated);
  EXPECT_FALSE(exact.estimated);
  ASSERT_TRUE(exact.connected);
  ASSERT_TRUE(sampled.connected);
  EXPECT_LE(sampled.diameter, exact.diameter);  // sampled eccentricities underestimate
  EXPECT_GT(sampled.mean_distance, 0.0);
  // Requesting at least n sources degrades to the exact computation.
  const DistanceSummary full = distance_summary(g, SampledSources{60, 42});
  EXPECT_FALSE(full.estimated);
  EXPECT_EQ(full.diameter, exact.diameter);
}

TEST(DistanceSummaryTest, MatchesFloydWarshallOracleExactly) {
  int connected_seen = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const NodeId n = 8 + static_cast<NodeId>(seed % 57);  // up to 64
    const double p = 0.08 + 0.3 * static_cast<double>(seed % 5) / 4.0;
    const TGraph g = build_random_gnp(n, p, seed * 31 + 1);
    const DistanceSummary got = distance_summary(g);
    const oracles::FloydSummary want = oracles::floyd_summary(g);
    ASSERT_EQ(got.connected, want.connected) << "seed " << seed;
    EXPECT_EQ(got.finite_diameter, want.finite_diameter) << "seed " << seed;
    EXPECT_EQ(got.finite_pairs, want.finite_pairs) << "seed " << seed;
    EXPECT_EQ(got.finite_mean, want.finite_mean) << "seed " << seed;
    if (got.connected) {
      ++connected_seen;
      EXPECT_EQ(got.diameter, want.diameter);
      EXPECT_EQ(got.mean_distance, want.mean);
    }
  }
  EXPECT_GT(connected_seen, 5);
}

TEST(DistanceSummaryTest, SymmetryAndTriangleInequality) {
  const TGraph g = build_random_gnp(24, 0.25, 11);
  std::vector<std::vector<int>> dist;
  for (NodeId u = 0; u < g.num_nodes(); ++u) dist.push_back(bfs_distances(g, u));
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      EXPECT_EQ(dist[u][v], dist[v][u]);
      if (dist[u][v] == kUnreachable) continue;
      for (NodeId w = 0; w < g.num_nodes(); ++w) {
        if (dist[u][w] == kUnreachable || dist[w][v] == kUnreachable) continue;
        EXPECT_LE(dist[u][v], dist[u][w] + dist[w][v]);
      }
    }
  }
}

TEST(DisjointPathsTest, CycleOppositeCorners) {
  EXPECT_EQ(vertex_disjoint_paths(cycle_graph(4), 0, 2), 2);
}

TEST(DisjointPathsTest, StarHubIsCutVertex) {
  TGraph g(4);  // hub 0, leaves 1..3
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  EXPECT_EQ(vertex_disjoint_paths(g, 1, 2), 1);
}

TEST(DisjointPathsTest, RejectsAdjacentAndEqualPairs) {
  const TGraph g = build_complete(3);
  EXPECT_THROW(vertex_disjoint_paths(g, 0, 1), std::invalid_argument);
  EXPECT_THROW(vertex_disjoint_paths(g, 1, 1), std::invalid_argument);
}

TEST(DisjointPathsTest, MatchesBruteForceCutOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const NodeId n = 5 + static_cast<NodeId>(seed % 8);  // up to 12
    const TGraph g = build_random_gnp(n, 0.35, seed * 17 + 3);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        EXPECT_EQ(vertex_disjoint_paths(g, u, v), oracles::min_vertex_cut_bruteforce(g, u, v))
            << "seed " << seed << " pair " << u << "," << v;
      }
    }
  }
}

TEST(DisjointPathsTest, MatchesPathPackingOnTinyGraphs) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const NodeId n = 5 + static_cast<NodeId>(seed % 3);
    const TGraph g = build_random_gnp(n, 0.4, seed + 100);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        EXPECT_EQ(vertex_disjoint_paths(g, u, v), oracles::max_disjoint_paths_by_packing(g, u, v))
            << "seed " << seed << " pair " << u << "," << v;
      }
    }
  }
}

TEST(DisjointPathsTest, TwoPathsSurviveSingleDeletion) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TGraph g = build_random_gnp(12, 0.4, seed * 3 + 5);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      for (NodeId v = u + 1; v < g.num_nodes(); ++v) {
        if (g.has_edge(u, v)) continue;
        if (vertex_disjoint_paths(g, u, v) < 2) continue;
        for (NodeId w = 0; w < g.num_nodes(); ++w) {
          if (w == u || w == v) continue;
          std::vector<char> removed(g.num_nodes(), 0);
          removed[w] = 1;
          EXPECT_FALSE(oracles::detail::separated(g, u, v, removed));
        }
      }
    }
  }
}

TEST(MinDisjointPathsTest, KnownSmallCases) {
  EXPECT_EQ(min_disjoint_paths(cycle_graph(5)), 2);
  EXPECT_EQ(min_disjoint_paths(path_graph(3)), 1);
  EXPECT_EQ(min_disjoint_paths(build_complete(4)), kAllPairsAdjacent);
}

TEST(DisjointShortestPathsTest, KnownSmallCases) {
  // C_6 opposite corners: the two arcs are both shortest.
  EXPECT_EQ(disjoint_shortest_paths(cycle_graph(6), 0, 3), 2);
  EXPECT_EQ(disjoint_shortest_paths(path_graph(4), 0, 3), 1);
  EXPECT_EQ(disjoint_shortest_paths(build_complete(4), 0, 1), 1);  // the edge itself
  TGraph disconnected(4);
  disconnected.add_edge(0, 1);
  EXPECT_EQ(disjoint_shortest_paths(disconnected, 0, 3), 0);
}

TEST(DisjointShortestPathsTest, DistanceTwoPairsEqualCommonNeighborCount) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const TGraph g = build_random_gnp(16, 0.35, seed * 5 + 2);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      const std::vector<int> dist = bfs_distances(g, u);
      for (NodeId v = u + 1; v < g.num_nodes(); ++v) {
        if (dist[v] != 2) continue;
        int common = 0;
        for (NodeId w : g.neighbors(u)) common += g.has_edge(w, v) ? 1 : 0;
        EXPECT_EQ(disjoint_shortest_paths(g, u, v), common)
            << "seed " << seed << " pair " << u << "," << v;
      }
    }
  }
}

TEST(DisjointShortestPathsTest, MatchesPathPackingOracle) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const NodeId n = 6 + static_cast<NodeId>(seed % 3);
    const TGraph g = build_random_gnp(n, 0.3, seed * 9 + 4);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        if (bfs_distances(g, u)[v] == kUnreachable) continue;
        EXPECT_EQ(disjoint_shortest_paths(g, u, v),
                  oracles::max_disjoint_shortest_paths_by_packing(g, u, v))
            << "seed " << seed << " pair " << u << "," << v;
      }
    }
  }
}

TEST(DisjointShortestPathsTest, NeverExceedsAnyLengthCount) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const TGraph g = build_random_gnp(14, 0.35, seed * 23 + 6);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      for (NodeId v = u + 1; v < g.num_nodes(); ++v) {
        if (g.has_edge(u, v)) continue;
        EXPECT_LE(disjoint_shortest_paths(g, u, v), vertex_disjoint_paths(g, u, v));
      }
    }
  }
}

TEST(DisjointShortestPathsTest, MinOverPairs) {
  EXPECT_EQ(min_disjoint_shortest_paths(build_complete(4)), kAllPairsAdjacent);
  EXPECT_EQ(min_disjoint_shortest_paths(path_graph(4)), 1);
  // Petersen: girth 5, so non-adjacent vertices share exactly one neighbor.
  const TGraph petersen = TGraph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  EXPECT_EQ(min_disjoint_shortest_paths(petersen), 1);
  EXPECT_EQ(min_disjoint_paths(petersen), 3);  // any-length redundancy is higher
}

TEST(MinDisjointPathsTest, MatchesAllPairsScan) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const TGraph g = build_random_gnp(10, 0.45, seed * 13 + 1);
    int want = kAllPairsAdjacent;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      for (NodeId v = u + 1; v < g.num_nodes(); ++v) {
        if (g.has_edge(u, v)) continue;
        want = std::min(want, vertex_disjoint_paths(g, u, v));
      }
    }
    EXPECT_EQ(min_disjoint_paths(g), want) << "seed " << seed;
  }
}

TEST(MinDisjointPathsTest, AtLeastAgreesWithExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TGraph g = build_random_gnp(12, 0.4, seed * 7 + 2);
    const int exact = min_disjoint_paths(g);
    for (int f = 1; f <= 5; ++f) {
      EXPECT_EQ(min_disjoint_paths_at_least(g, f), exact >= f) << "seed " << seed << " f " << f;
    }
  }
}

TEST(RngTest, BoundedDrawsStayInRange) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.next_below(13), 13u);
    const double u = rng.next_unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_THROW(rng.next_below(0), std::invalid_argument);
}

TEST(RngTest, DerivedStreamsAreStableAndDistinct) {
  EXPECT_EQ(derive_seed(5, 3, "deploy"), derive_seed(5, 3, "deploy"));
  EXPECT_NE(derive_seed(5, 3, "deploy"), derive_seed(5, 4, "deploy"));
  EXPECT_NE(derive_seed(5, 3, "deploy"), derive_seed(5, 3, "victim"));
  EXPECT_NE(derive_seed(6, 3, "deploy"), derive_seed(5, 3, "deploy"));
}

TEST(RngTest, ShuffleAndSamplingAreDeterministic) {
  std::vector<int> a{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> b = a;
  Rng r1(99), r2(99);
  r1.shuffle(a);
  r2.shuffle(b);
  EXPECT_EQ(a, b);

  Rng r3(4);
  const std::vector<std::uint64_t> sample = r3.sample_without_replacement(20, 8);
  EXPECT_EQ(sample.size(), 8u);
  std::set<std::uint64_t> distinct(sample.begin(), sample.end());
  EXPECT_EQ(distinct.size(), 8u);
  for (std::uint64_t v : sample) EXPECT_LT(v, 20u);
  EXPECT_THROW(r3.sample_without_replacement(3, 4), std::invalid_argument);
}

TEST(EdgeListIoTest, RoundTripIsByteStable) {
  const TGraph g = build_random_gnp(20, 0.3, 9);
  std::ostringstream first;
  save_edge_list(g, first);
  std::istringstream in(first.str());
  const TGraph loaded = load_edge_list(in);
  std::ostringstream second;
  save_edge_list(loaded, second);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(loaded, g);
}

TEST(EdgeListIoTest, SkipsCommentsAndValidates) {
  std::istringstream in("# built by hand\nn 3\n0 1\n1 2\n");
  const TGraph g = load_edge_list(in);
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);

  std::istringstream bad_header("3\n0 1\n");
  EXPECT_THROW(load_edge_list(bad_header), std::runtime_error);
  std::istringstream out_of_range("n 3\n0 7\n");
  EXPECT_THROW(load_edge_list(out_of_range), std::runtime_error);
  std::istringstream self_loop("n 3\n1 1\n");
  EXPECT_THROW(load_edge_list(self_loop), std::invalid_argument);
}

}  // namespace
}  // namespace kpgraph
