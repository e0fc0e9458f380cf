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

#ifndef KPGRAPH_EXPERIMENT_HPP
#define KPGRAPH_EXPERIMENT_HPP

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "kpgraph/bounds.hpp"
#include "kpgraph/config.hpp"
#include "kpgraph/connectivity.hpp"
#include "kpgraph/constructions.hpp"
#include "kpgraph/deployment.hpp"
#include "kpgraph/graph.hpp"
#include "kpgraph/keying.hpp"
#include "kpgraph/rng.hpp"

namespace kpgraph {

/// Full experiment description: construct (or load) a trust graph, assign
/// keys, deploy it `trials` times, establish path keys, and compare every
/// measurement with its analytic bound. All randomness derives from `seed`,
/// so results are independent of thread count and run order.
struct ExperimentConfig {
  ConstructionSpec construction;
  std::string graph_path;  // when non-empty, load this edge list instead

  double b = 0.0;
  double p_die = 0.0;

  std::string keying = "distinct";  // "distinct" | "reused"
  int g = 1;                        // reuse limit for "reused"

  std::uint64_t max_chain = 0;  // 0 = no limit (n hops)
  bool iterate = true;
  int trials = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  bool compromise = false;  // add a per-trial single-victim compromise column

  NodeId exact_cap = 256;                    // skip exact f above this many nodes
  std::uint64_t sampling_threshold = 20000;  // sampled distance summary above this

  void validate() const {
    if (trials < 1) throw std::invalid_argument("experiment: need trials >= 1");
    if (threads < 1) throw std::invalid_argument("experiment: need threads >= 1");
    if (keying != "distinct" && keying != "reused") {
      throw std::invalid_argument("experiment: keying must be 'distinct' or 'reused'");
    }
    if (keying == "reused" && g < 1) throw std::invalid_argument("experiment: need g >= 1");
  }
};

inline ExperimentConfig experiment_from_config(const KeyValueConfig& cfg) {
  ExperimentConfig e;
  if (cfg.has("graph")) {
    e.graph_path = cfg.get_string("graph");
  } else {
    KeyValueConfig sub;
    for (const char* key : {"kind", "n", "q", "r", "u", "p", "diameter", "disjoint"}) {
      if (cfg.has(key)) sub.set(key, cfg.get_string(key));
    }
    if (cfg.has("construction_seed")) sub.set("seed", cfg.get_string("construction_seed"));
    e.construction = spec_from_config(sub);
  }
  e.b = cfg.get_double("b", 0.0);
  e.p_die = cfg.get_double("p_die", 0.0);
  e.keying = cfg.get_string("keying", "distinct");
  e.g = static_cast<int>(cfg.get_int("g", 1));
  e.max_chain = cfg.get_uint("max_chain", 0);
  e.iterate = cfg.get_bool("iterate", true);
  e.trials = static_cast<int>(cfg.get_int("trials", 1));
  e.seed = cfg.get_uint("seed", 0);
  e.threads = static_cast<int>(cfg.get_int("threads", 1));
  e.compromise = cfg.get_bool("compromise", false);
  e.exact_cap = static_cast<NodeId>(cfg.get_uint("exact_cap", 256));
  e.sampling_threshold = cfg.get_uint("sampling_threshold", 20000);
  e.validate();
  return e;
}

namespace detail {

/// Shortest stable decimal form; CSV bytes must not depend on locale or
/// stream state.
inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace detail

/// The semantic part of a config: everything that determines the produced
/// data. Execution knobs (thread count, output paths) stay out so identical
/// experiments emit identical bytes.
inline KeyValueConfig semantic_config(const ExperimentConfig& cfg) {
  KeyValueConfig out;
  if (!cfg.graph_path.empty()) {
    out.set("graph", cfg.graph_path);
  } else {
    const KeyValueConfig c = to_config(cfg.construction);
    for (const auto& [k, v] : c.entries()) {
      out.set(k == "seed" ? "construction_seed" : k, v);
    }
  }
  out.set("b", detail::fmt_double(cfg.b));
  out.set("p_die", detail::fmt_double(cfg.p_die));
  out.set("keying", cfg.keying);
  out.set("g", std::to_string(cfg.g));
  out.set("max_chain", std::to_string(cfg.max_chain));
  out.set("iterate", cfg.iterate ? "true" : "false");
  out.set("trials", std::to_string(cfg.trials));
  out.set("seed", std::to_string(cfg.seed));
  out.set("compromise", cfg.compromise ? "true" : "false");
  out.set("exact_cap", std::to_string(cfg.exact_cap));
  out.set("sampling_threshold", std::to_string(cfg.sampling_threshold));
  return out;
}

/// Per-trial measurements, kept structured so tests need not parse CSV.
struct TrialStats {
  int trial = 0;
  std::uint64_t seed = 0;
  std::size_t alive = 0;
  std::size_t trusted = 0;
  std::size_t virtual_initial = 0;
  std::size_t established = 0;
  std::size_t unconverted = 0;
  double p_c_measured = 0.0;
  int dt_diameter = 0;  // finite diameter of the deployed trust subgraph
  double dt_mean_physical = 0.0;
  std::uint64_t dt_infinite_pairs = 0;
  int w_max = 0;
  double w_bar = 0.0;
  double w_bar_conversions = 0.0;
  std::map<int, int> chain_histogram;
  std::optional<double> mean_dist_bound;
  std::optional<bool> mean_dist_ok;   // soft check (not in the exit contract)
  std::optional<double> p_compromise;
  std::optional<double> compromise_bound;
  std::optional<bool> compromise_ok;  // strict check
};

struct DeployResult {
  // Trust-graph facts shared by all trials.
  std::uint64_t nodes = 0;
  std::uint64_t edge_count = 0;
  int diameter = 0;
  double mean_distance = 0.0;
  int theta_min = 0;
  int theta_max = 0;
  int measured_f = 1;          // min vertex-disjoint paths over non-adjacent pairs
  int measured_f_shortest = 1; // same, restricted to shortest paths (chain redundancy)
  bool f_exact = false;
  double p_c_analytic = 0.0;
  bool moore_ok = true;  // strict; skipped (true) when D < 2 or theta_max <= 2

  std::vector<TrialStats> trials;
  bool strict_ok = true;  // moore_ok and every trial's compromise check

  std::string csv;                  // header + one row per trial
  std::vector<std::string> traces;  // one JSON object per trial
};

inline const char* deploy_csv_header() {
  return "trial,seed,alive,trusted,virtual,established,unconverted,p_c_measured,p_c_analytic,"
         "dt_diameter,dt_mean_physical,dt_infinite_pairs,w_max,w_bar,w_bar_conversions,"
         "mean_dist_bound,mean_dist_ok,p_compromise,compromise_bound,compromise_ok";
}

inline DeployResult run_deploy(const ExperimentConfig& cfg, const TGraph& trust) {
  cfg.validate();
  const NodeId n = trust.num_nodes();
  if (n < 2) throw std::invalid_argument("run_deploy: need at least 2 nodes");

  PhysicalModel base_model{n, cfg.b, cfg.p_die, 0};
  base_model.validate();

  DeployResult result;
  result.nodes = n;
  result.edge_count = trust.num_edges();

  const DegreeStats degrees = degree_stats(trust);
  result.theta_min = static_cast<int>(degrees.theta_min);
  result.theta_max = static_cast<int>(degrees.theta_max);

  std::optional<SampledSources> sampling;
  if (n > cfg.sampling_threshold) {
    sampling = SampledSources{static_cast<std::size_t>(64), derive_seed(cfg.seed, 0, "sample")};
  }
  const DistanceSummary trust_summary = distance_summary(trust, sampling);
  if (!trust_summary.connected) {
    throw std::invalid_argument("run_deploy: trust graph must be connected");
  }
  result.diameter = trust_summary.finite_diameter;
  result.mean_distance = trust_summary.finite_mean;

  if (n <= cfg.exact_cap) {
    const int f = min_disjoint_paths(trust);
    result.measured_f = f == kAllPairsAdjacent ? static_cast<int>(n) - 1 : f;
    const int fs = min_disjoint_shortest_paths(trust);
    result.measured_f_shortest = fs == kAllPairsAdjacent ? static_cast<int>(n) - 1 : fs;
    result.f_exact = true;
  } else {
    // f = 1 keeps the mean-distance bound valid (larger f only tightens it).
    result.measured_f = 1;
    result.measured_f_shortest = 1;
    result.f_exact = false;
  }

  const std::uint64_t all_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  result.p_c_analytic = base_model.p_link() * static_cast<double>(result.edge_count) /
                        static_cast<double>(all_pairs);

  // Moore storage check on the trust graph (strict when meaningful).
  if (result.diameter >= 2 && result.theta_max > 2) {
    result.moore_ok =
        result.theta_max >= bounds::moore_storage_lower(static_cast<double>(n), result.diameter);
  }

  KeyGraph keys;
  if (cfg.compromise) {
    keys = cfg.keying == "reused" ? assign_reused(trust, cfg.g, derive_seed(cfg.seed, 0, "keys"))
                                  : assign_distinct(trust);
  }

  const std::size_t chain_cap =
      cfg.max_chain == 0 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(cfg.max_chain);

  result.trials.resize(cfg.trials);
  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= cfg.trials) break;

      TrialStats t;
      t.trial = i;
      t.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i), "deploy");
      PhysicalModel model = base_model;
      model.seed = t.seed;

      const PhysicalGraph physical = sample_physical(model);
      DeployedTGraph deployed = overlay(trust, physical);
      t.alive = physical.alive_count();
      t.trusted = deployed.trusted.size();
      t.virtual_initial = deployed.virtual_edges.size();
      t.p_c_measured = static_cast<double>(t.trusted) / static_cast<double>(all_pairs);

      const DistanceSummary deployed_summary = deployed_metrics(deployed);
      const PhysicalPairStats pairs = physical_pair_distances(deployed);
      t.dt_diameter = deployed_summary.finite_diameter;
      t.dt_mean_physical = pairs.mean_finite;
      t.dt_infinite_pairs = pairs.infinite_pairs;

      // The bound's f is chain redundancy: disjoint shortest-path chains,
      // not disjoint paths of any length.
      if (auto bound = bounds::deployed_mean_distance_bound(
              result.mean_distance, result.diameter, t.dt_diameter, result.theta_min, n, cfg.b,
              cfg.p_die, result.measured_f_shortest)) {
        t.mean_dist_bound = *bound;
        t.mean_dist_ok = t.dt_mean_physical <= *bound + 1e-12;
      }

      const EnergyReport energy = establish_path_keys(deployed, chain_cap, cfg.iterate);
      t.established = energy.converted;
      t.unconverted = energy.unconverted;
      t.w_max = energy.w_max;
      t.w_bar = energy.w_bar;
      t.w_bar_conversions = energy.w_bar_conversions;
      for (int len : energy.chain_lengths) ++t.chain_histogram[len];

      if (cfg.compromise) {
        Rng victim_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i), "victim"));
        const NodeId victim = static_cast<NodeId>(victim_rng.next_below(n));
        const CompromiseReport report =
            simulate_compromise(keys, {victim}, result.diameter);
        t.p_compromise = report.fraction;
        t.compromise_bound = report.bound;
        t.compromise_ok = report.bound_holds;
      }

      result.trials[i] = std::move(t);
    }
  };

  std::vector<std::thread> pool;
  const int workers = std::min(cfg.threads, cfg.trials);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // Rows are emitted in trial order regardless of completion order, behind
  // an embedded echo of the semantic config.
  const KeyValueConfig echo = semantic_config(cfg);
  std::ostringstream csv;
  for (const auto& [k, v] : echo.entries()) csv << "# " << k << " = " << v << '\n';
  csv << deploy_csv_header() << '\n';
  {
    nlohmann::json cfg_line{{"config", nlohmann::json::object()}};
    for (const auto& [k, v] : echo.entries()) cfg_line["config"][k] = v;
    result.traces.push_back(cfg_line.dump());
  }
  for (const TrialStats& t : result.trials) {
    csv << t.trial << ',' << t.seed << ',' << t.alive << ',' << t.trusted << ','
        << t.virtual_initial << ',' << t.established << ',' << t.unconverted << ','
        << detail::fmt_double(t.p_c_measured) << ',' << detail::fmt_double(result.p_c_analytic)
        << ',' << t.dt_diameter << ',' << detail::fmt_double(t.dt_mean_physical) << ','
        << t.dt_infinite_pairs << ',' << t.w_max << ',' << detail::fmt_double(t.w_bar) << ','
        << detail::fmt_double(t.w_bar_conversions) << ',';
    if (t.mean_dist_bound) csv << detail::fmt_double(*t.mean_dist_bound);
    csv << ',';
    if (t.mean_dist_ok) csv << (*t.mean_dist_ok ? 1 : 0);
    csv << ',';
    if (t.p_compromise) csv << detail::fmt_double(*t.p_compromise);
    csv << ',';
    if (t.compromise_bound) csv << detail::fmt_double(*t.compromise_bound);
    csv << ',';
    if (t.compromise_ok) csv << (*t.compromise_ok ? 1 : 0);
    csv << '\n';

    nlohmann::json trace{{"trial", t.trial},
                         {"seed", t.seed},
                         {"alive", t.alive},
                         {"trusted", t.trusted},
                         {"virtual", t.virtual_initial},
                         {"established", t.established},
                         {"unconverted", t.unconverted},
                         {"w_max", t.w_max},
                         {"w_bar", t.w_bar},
                         {"dt_diameter", t.dt_diameter},
                         {"dt_mean_physical", t.dt_mean_physical}};
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [len, count] : t.chain_histogram) hist[std::to_string(len)] = count;
    trace["chain_histogram"] = hist;
    result.traces.push_back(trace.dump());

    if (t.compromise_ok && !*t.compromise_ok) result.strict_ok = false;
  }
  if (!result.moore_ok) result.strict_ok = false;
  result.csv = csv.str();
  return result;
}

inline DeployResult run_deploy(const ExperimentConfig& cfg) {
  const TGraph trust =
      cfg.graph_path.empty() ? build(cfg.construction) : load_edge_list(cfg.graph_path);
  return run_deploy(cfg, trust);
}

}  // namespace kpgraph

#endif  // KPGRAPH_EXPERIMENT_HPP
