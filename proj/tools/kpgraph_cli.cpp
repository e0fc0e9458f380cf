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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kpgraph/kpgraph.hpp"

namespace {

using namespace kpgraph;

std::string default_out_dir() {
  const char* env = std::getenv("KPGRAPH_OUT_DIR");
  return env && *env ? env : ".";
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

int run_construct(const ConstructionSpec& spec, const std::string& out_path) {
  const TGraph g = build(spec);
  const DegreeStats degrees = degree_stats(g);

  std::optional<SampledSources> sampling;
  if (g.num_nodes() > 20000) sampling = SampledSources{64, 0};
  const DistanceSummary summary = distance_summary(g, sampling);

  std::vector<std::string> comments;
  const KeyValueConfig spec_config = to_config(spec);
  for (const auto& [k, v] : spec_config.entries()) comments.push_back(k + " = " + v);
  comments.push_back("nodes = " + std::to_string(g.num_nodes()));
  comments.push_back("edges = " + std::to_string(g.num_edges()));
  comments.push_back("theta_min = " + std::to_string(degrees.theta_min));
  comments.push_back("theta_max = " + std::to_string(degrees.theta_max));
  comments.push_back("connected = " + std::string(summary.connected ? "true" : "false"));
  if (summary.connected) {
    comments.push_back("diameter = " + std::to_string(summary.diameter) +
                       (summary.estimated ? " (estimate)" : ""));
  }

  std::ostringstream text;
  save_edge_list(g, text, comments);
  write_or_print(text.str(), out_path);
  if (!out_path.empty()) {
    std::cout << "wrote " << out_path << " (" << g.num_nodes() << " nodes, " << g.num_edges()
              << " edges)\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  std::string status;  // PASS | FAIL | SKIPPED
  std::string detail;
};

int run_analyze(const std::string& graph_path, NodeId exact_cap, const std::string& format,
                const std::string& out_path) {
  const TGraph g = load_edge_list(graph_path);
  if (g.num_nodes() < 2) throw std::runtime_error("analyze: graph has fewer than 2 nodes");
  const DegreeStats degrees = degree_stats(g);
  const DistanceSummary summary = distance_summary(g);

  std::optional<int> measured_f;
  if (g.num_nodes() <= exact_cap) {
    measured_f = min_disjoint_paths(g);
  }

  std::vector<bounds::BoundsReport> reports;
  std::vector<Check> checks;
  if (!summary.connected) {
    checks.push_back({"connectivity", "FAIL", "graph is disconnected; bound checks skipped"});
  } else {
    const int diameter = summary.diameter;
    const double mean = summary.mean_distance;
    const int theta_max = static_cast<int>(degrees.theta_max);
    const int theta_min = static_cast<int>(degrees.theta_min);

    auto moore = bounds::report_moore_storage_lower(g.num_nodes(), diameter);
    reports.push_back(moore);
    if (!moore.applicable) {
      checks.push_back({"moore_storage_lower", "SKIPPED", moore.reason});
    } else if (theta_max <= 2) {
      checks.push_back({"moore_storage_lower", "SKIPPED", "needs theta_max > 2"});
    } else {
      const bool ok = theta_max >= moore.value;
      checks.push_back({"moore_storage_lower", ok ? "PASS" : "FAIL",
                        "theta_max=" + std::to_string(theta_max) +
                            " vs bound=" + std::to_string(moore.value)});
    }

    if (measured_f) {
      const int f = *measured_f == kAllPairsAdjacent ? static_cast<int>(g.num_nodes()) - 1
                                                     : *measured_f;
      auto cor = bounds::report_moore_storage_lower_disjoint(g.num_nodes(), diameter, f);
      reports.push_back(cor);
      if (!cor.applicable) {
        checks.push_back({"moore_storage_lower_disjoint", "SKIPPED", cor.reason});
      } else if (theta_max <= 2) {
        checks.push_back({"moore_storage_lower_disjoint", "SKIPPED", "needs theta_max > 2"});
      } else {
        const bool ok = theta_max >= cor.value;
        checks.push_back({"moore_storage_lower_disjoint", ok ? "PASS" : "FAIL",
                          "theta_max=" + std::to_string(theta_max) +
                              " vs bound=" + std::to_string(cor.value)});
      }
    } else {
      checks.push_back({"moore_storage_lower_disjoint", "SKIPPED",
                        "n above --exact-cap; disjoint paths not measured"});
    }

    auto lower = bounds::report_mean_distance_lower(g.num_nodes(), diameter, theta_min, theta_max);
    auto upper = bounds::report_mean_distance_upper(g.num_nodes(), diameter, theta_min, theta_max);
    reports.push_back(lower);
    reports.push_back(upper);
    if (!lower.applicable) {
      checks.push_back({"mean_distance_sandwich", "SKIPPED", lower.reason});
    } else if (diameter == 1) {
      checks.push_back({"mean_distance_sandwich", "SKIPPED",
                        "degenerate: D=1 means a complete graph with mean distance exactly 1"});
    } else {
      const bool ok = lower.value < mean && mean < upper.value;
      std::ostringstream detail;
      detail << lower.value << " < " << mean << " < " << upper.value;
      checks.push_back({"mean_distance_sandwich", ok ? "PASS" : "FAIL", detail.str()});
    }
  }

  bool any_fail = false;
  for (const auto& c : checks) any_fail = any_fail || c.status == "FAIL";

  std::ostringstream text;
  if (format == "json") {
    nlohmann::json j{{"nodes", g.num_nodes()},
                     {"edges", g.num_edges()},
                     {"theta_min", degrees.theta_min},
                     {"theta_max", degrees.theta_max},
                     {"connected", summary.connected}};
    if (summary.connected) {
      j["diameter"] = summary.diameter;
      j["mean_distance"] = summary.mean_distance;
    } else {
      j["finite_diameter"] = summary.finite_diameter;
      j["finite_mean"] = summary.finite_mean;
      j["finite_pairs"] = summary.finite_pairs;
    }
    if (measured_f) {
      j["min_disjoint_paths"] =
          *measured_f == kAllPairsAdjacent ? nlohmann::json("all_pairs_adjacent")
                                           : nlohmann::json(*measured_f);
    }
    j["bounds"] = nlohmann::json::array();
    for (const auto& r : reports) j["bounds"].push_back(bounds::to_json(r));
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    }
    text << j.dump(2) << '\n';
  } else {
    text << "nodes = " << g.num_nodes() << '\n';
    text << "edges = " << g.num_edges() << '\n';
    text << "theta_min = " << degrees.theta_min << '\n';
    text << "theta_max = " << degrees.theta_max << '\n';
    text << "connected = " << (summary.connected ? "true" : "false") << '\n';
    if (summary.connected) {
      text << "diameter = " << summary.diameter << '\n';
      text << "mean_distance = " << summary.mean_distance << '\n';
    } else {
      text << "finite_diameter = " << summary.finite_diameter << '\n';
      text << "finite_mean = " << summary.finite_mean << '\n';
      text << "finite_pairs = " << summary.finite_pairs << '\n';
    }
    if (measured_f) {
      text << "min_disjoint_paths = ";
      if (*measured_f == kAllPairsAdjacent) {
        text << "all pairs adjacent" << '\n';
      } else {
        text << *measured_f << '\n';
      }
    } else {
      text << "min_disjoint_paths = skipped (n above --exact-cap)" << '\n';
    }
    text << bounds::bounds_csv_header() << '\n';
    for (const auto& r : reports) text << bounds::to_csv_row(r) << '\n';
    for (const auto& c : checks) {
      text << "check " << c.name << ": " << c.status << " (" << c.detail << ")\n";
    }
  }
  write_or_print(text.str(), out_path);
  return any_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

int run_bounds(CLI::App* cmd, std::uint64_t n, int diameter, int deployed_diameter,
               int theta_min, int theta_max, int f, int g, double b, double p_die, double p_link,
               std::uint64_t edges, double mean_dist, int lambda, int deleted,
               const std::string& format, const std::string& out_path) {
  auto given = [&](const std::string& flag) { return cmd->count(flag) > 0; };
  std::vector<bounds::BoundsReport> reports;

  if (given("--n") && given("--diameter")) {
    reports.push_back(bounds::report_moore_storage_lower(n, diameter));
    if (given("--f")) {
      reports.push_back(bounds::report_moore_storage_lower_disjoint(n, diameter, f));
    }
    if (given("--theta-min") && given("--theta-max")) {
      reports.push_back(bounds::report_mean_distance_lower(n, diameter, theta_min, theta_max));
      reports.push_back(bounds::report_mean_distance_upper(n, diameter, theta_min, theta_max));
      if (given("--g")) {
        reports.push_back(
            bounds::report_compromise_fraction(n, diameter, theta_min, theta_max, g));
      }
    }
  }
  if (given("--p-link") && given("--edges")) {
    reports.push_back(bounds::report_min_degree_for_connectivity(p_link, edges));
  }
  if (given("--diameter") && given("--deleted")) {
    reports.push_back(bounds::report_edge_deletion_diameter(diameter, deleted));
  }
  if (given("--n") && given("--lambda") && given("--deleted")) {
    reports.push_back(bounds::report_vertex_deletion_diameter(n, lambda, deleted));
  }
  if (given("--n") && given("--b") && given("--p-die") && given("--theta-min") &&
      given("--theta-max")) {
    reports.push_back(
        bounds::report_trusted_link_probability_lower(n, b, p_die, theta_min, theta_max));
    reports.push_back(
        bounds::report_trusted_link_probability_upper(n, b, p_die, theta_min, theta_max));
  }
  if (given("--mean-dist") && given("--diameter") && given("--deployed-diameter") &&
      given("--theta-min") && given("--n") && given("--b") && given("--p-die") && given("--f")) {
    reports.push_back(bounds::report_deployed_mean_distance_bound(
        mean_dist, diameter, deployed_diameter, theta_min, n, b, p_die, f));
  }

  if (reports.empty()) {
    std::cerr << "bounds: not enough inputs; see --help for the flag combinations\n";
    return 2;
  }

  std::ostringstream text;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(bounds::to_json(r));
    text << arr.dump(2) << '\n';
  } else {
    text << bounds::bounds_csv_header() << '\n';
    for (const auto& r : reports) text << bounds::to_csv_row(r) << '\n';
  }
  write_or_print(text.str(), out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// deploy
// ---------------------------------------------------------------------------

int run_deploy_cmd(const KeyValueConfig& cfg, const std::string& out_dir) {
  const ExperimentConfig experiment = experiment_from_config(cfg);
  const DeployResult result = run_deploy(experiment);

  std::filesystem::create_directories(out_dir);
  const std::filesystem::path csv_path = std::filesystem::path(out_dir) / "deploy_summary.csv";
  const std::filesystem::path tr_path = std::filesystem::path(out_dir) / "deploy_traces.jsonl";
  {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open " + csv_path.string());
    out << result.csv;
  }
  {
    std::ofstream out(tr_path);
    if (!out) throw std::runtime_error("cannot open " + tr_path.string());
    for (const auto& line : result.traces) out << line << '\n';
  }

  std::cout << "trust graph: " << result.nodes << " nodes, " << result.edge_count
            << " edges, diameter " << result.diameter << ", theta [" << result.theta_min << ", "
            << result.theta_max << "], f "
            << (result.f_exact ? std::to_string(result.measured_f)
                               : std::string(">=1 (not measured)"))
            << '\n';
  std::cout << "trials: " << result.trials.size() << ", summary " << csv_path.string()
            << ", traces " << tr_path.string() << '\n';
  std::cout << "strict checks (moore, compromise): " << (result.strict_ok ? "ok" : "VIOLATED")
            << '\n';
  return result.strict_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// compromise
// ---------------------------------------------------------------------------

int run_compromise(const std::string& graph_path, const std::string& keying, int g,
                   std::uint64_t seed, int victims, int trials, const std::string& format,
                   const std::string& out_path) {
  const TGraph graph = load_edge_list(graph_path);
  if (victims < 1) throw std::runtime_error("compromise: need --victims >= 1");
  if (trials < 1) throw std::runtime_error("compromise: need --trials >= 1");
  const KeyGraph keys = keying == "reused" ? assign_reused(graph, g, derive_seed(seed, 0, "keys"))
                                           : assign_distinct(graph);
  const DistanceSummary summary = distance_summary(graph);
  std::optional<int> diameter;
  if (summary.connected) diameter = summary.diameter;

  bool all_hold = true;
  std::ostringstream text;
  nlohmann::json arr = nlohmann::json::array();
  if (format != "json") {
    text << "trial,victims,revealed_keys,affected_edges,edge_count,fraction,bound,bound_loose,"
            "bound_holds\n";
  }
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), "victims"));
    std::vector<NodeId> chosen;
    for (std::uint64_t v : rng.sample_without_replacement(graph.num_nodes(),
                                                          static_cast<std::uint64_t>(victims))) {
      chosen.push_back(static_cast<NodeId>(v));
    }
    const CompromiseReport report = simulate_compromise(keys, chosen, diameter);
    if (report.bound_holds && !*report.bound_holds) all_hold = false;
    if (format == "json") {
      nlohmann::json j = to_json(report);
      j["trial"] = t;
      arr.push_back(j);
    } else {
      text << t << ',';
      for (std::size_t i = 0; i < report.victims.size(); ++i) {
        if (i > 0) text << ';';
        text << report.victims[i];
      }
      text << ',' << report.revealed_keys << ',' << report.affected_edges << ','
           << report.edge_count << ',' << report.fraction << ',';
      if (report.bound) text << *report.bound;
      text << ',' << (report.bound_loose ? 1 : 0) << ',';
      if (report.bound_holds) text << (*report.bound_holds ? 1 : 0);
      text << '\n';
    }
  }
  if (format == "json") text << arr.dump(2) << '\n';
  write_or_print(text.str(), out_path);
  return all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key-predistribution trust-graph workbench"};
  app.require_subcommand(1);

  // --- construct ---------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build a trust graph, write its edge list");
  construct->require_subcommand(1);
  static ConstructionSpec spec;
  static std::string construct_out;

  auto add_out = [](CLI::App* cmd) {
    cmd->add_option("--out", construct_out, "Output edge-list file (default: stdout)");
  };

  auto* c_complete = construct->add_subcommand("complete", "Complete graph K_n");
  c_complete->add_option("--n", spec.n, "Number of nodes")->required();
  add_out(c_complete);
  c_complete->callback([] { spec.kind = ConstructionKind::complete; });

  auto* c_heuristic =
      construct->add_subcommand("heuristic", "Prune K_n subject to diameter/disjoint targets");
  c_heuristic->add_option("--n", spec.n, "Number of nodes")->required();
  c_heuristic->add_option("--diameter", spec.diameter, "Diameter target")->required();
  c_heuristic->add_option("--disjoint", spec.disjoint, "Disjoint-path target")->required();
  c_heuristic->add_option("--seed", spec.seed, "Edge-order seed");
  add_out(c_heuristic);
  c_heuristic->callback([] { spec.kind = ConstructionKind::heuristic; });

  auto* c_debruijn = construct->add_subcommand("de-bruijn", "Undirected de Bruijn graph");
  c_debruijn->add_option("--q", spec.q, "Alphabet size (q >= 2)")->required();
  c_debruijn->add_option("--r", spec.r, "String length (r >= 1)")->required();
  add_out(c_debruijn);
  c_debruijn->callback([] { spec.kind = ConstructionKind::de_bruijn; });

  auto* c_variant =
      construct->add_subcommand("variant", "Basis-vector de Bruijn variant over Z_q^r");
  c_variant->add_option("--q", spec.q, "Prime modulus")->required();
  c_variant->add_option("--r", spec.r, "Dimension (r >= 1)")->required();
  c_variant->add_option("--u", spec.u, "Family size (r < u <= q)")->required();
  add_out(c_variant);
  c_variant->callback([] { spec.kind = ConstructionKind::de_bruijn_variant; });

  auto* c_gnp = construct->add_subcommand("gnp", "Random G(n, p) baseline");
  c_gnp->add_option("--n", spec.n, "Number of nodes")->required();
  c_gnp->add_option("--p", spec.p, "Edge probability")->required();
  c_gnp->add_option("--seed", spec.seed, "Sampling seed");
  add_out(c_gnp);
  c_gnp->callback([] { spec.kind = ConstructionKind::random_gnp; });

  // --- analyze -----------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "Measure a stored graph against the bounds");
  static std::string analyze_path, analyze_format = "csv", analyze_out;
  static NodeId analyze_cap = 256;
  analyze->add_option("graph", analyze_path, "Edge-list file")->required();
  analyze->add_option("--exact-cap", analyze_cap,
                      "Largest n for exact disjoint-path measurement");
  analyze->add_option("--format", analyze_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--out", analyze_out, "Write report here instead of stdout");

  // --- bounds ------------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate closed-form bounds from raw inputs");
  static std::uint64_t b_n = 0, b_edges = 0;
  static int b_diameter = 0, b_deployed_diameter = 0, b_theta_min = 0, b_theta_max = 0, b_f = 1,
             b_g = 1, b_lambda = 0, b_deleted = 0;
  static double b_b = 0, b_p_die = 0, b_p_link = 0, b_mean = 0;
  static std::string bounds_format = "csv", bounds_out;
  bounds_cmd->add_option("--n", b_n, "Node count");
  bounds_cmd->add_option("--diameter", b_diameter, "Trust-graph diameter D");
  bounds_cmd->add_option("--deployed-diameter", b_deployed_diameter, "Deployed diameter D_DT");
  bounds_cmd->add_option("--theta-min", b_theta_min, "Minimum degree");
  bounds_cmd->add_option("--theta-max", b_theta_max, "Maximum degree");
  bounds_cmd->add_option("--f", b_f, "Disjoint-path count");
  bounds_cmd->add_option("--g", b_g, "Key reuse limit");
  bounds_cmd->add_option("--b", b_b, "Mean physical neighbor count");
  bounds_cmd->add_option("--p-die", b_p_die, "Node death probability");
  bounds_cmd->add_option("--p-link", b_p_link, "Unconditional link probability");
  bounds_cmd->add_option("--edges", b_edges, "Trust-graph edge count");
  bounds_cmd->add_option("--mean-dist", b_mean, "Trust-graph mean distance");
  bounds_cmd->add_option("--lambda", b_lambda, "Vertex connectivity");
  bounds_cmd->add_option("--deleted", b_deleted, "Deleted edges/vertices t");
  bounds_cmd->add_option("--format", bounds_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  bounds_cmd->add_option("--out", bounds_out, "Write report here instead of stdout");

  // --- deploy ------------------------------------------------------------
  auto* deploy = app.add_subcommand("deploy", "Run seeded deployment trials");
  static std::string deploy_config_path, deploy_out_dir, deploy_graph, deploy_keying;
  static std::uint64_t d_seed = 0, d_max_chain = 0;
  static int d_trials = 0, d_g = 0, d_threads = 0;
  static double d_b = -1.0, d_p_die = -1.0;
  static NodeId d_exact_cap = 0;
  static bool d_iterate = true, d_compromise = false;
  deploy->add_option("--config", deploy_config_path, "Experiment config file (key = value)");
  deploy->add_option("--graph", deploy_graph, "Trust-graph edge list (overrides config)");
  deploy->add_option("--seed", d_seed, "Master seed");
  deploy->add_option("--trials", d_trials, "Trial count");
  deploy->add_option("--max-chain", d_max_chain, "Acquaintance-chain hop cap (0 = none)");
  deploy->add_flag("--iterate,!--no-iterate", d_iterate,
                   "Repeat conversion sweeps to a fixed point");
  deploy->add_option("--g", d_g, "Key reuse limit");
  deploy->add_option("--keying", deploy_keying, "distinct|reused");
  deploy->add_option("--b", d_b, "Mean physical neighbor count");
  deploy->add_option("--p-die", d_p_die, "Node death probability");
  deploy->add_option("--threads", d_threads, "Worker count (does not change output bytes)");
  deploy->add_flag("--compromise", d_compromise, "Add per-trial compromise columns");
  deploy->add_option("--exact-cap", d_exact_cap, "Largest n for exact disjoint-path measurement");
  deploy->add_option("--out", deploy_out_dir, "Output directory (default $KPGRAPH_OUT_DIR or .)");

  // --- compromise --------------------------------------------------------
  auto* compromise = app.add_subcommand("compromise", "Simulate key-ring compromise");
  static std::string comp_graph, comp_keying = "distinct", comp_format = "csv", comp_out;
  static int comp_g = 1, comp_victims = 1, comp_trials = 1;
  static std::uint64_t comp_seed = 0;
  compromise->add_option("--graph", comp_graph, "Trust-graph edge list")->required();
  compromise->add_option("--keying", comp_keying, "distinct|reused")
      ->check(CLI::IsMember({"distinct", "reused"}));
  compromise->add_option("--g", comp_g, "Key reuse limit for 'reused'");
  compromise->add_option("--seed", comp_seed, "Master seed");
  compromise->add_option("--victims", comp_victims, "Victims per trial");
  compromise->add_option("--trials", comp_trials, "Trial count");
  compromise->add_option("--format", comp_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  compromise->add_option("--out", comp_out, "Write report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return run_construct(spec, construct_out);
    if (analyze->parsed()) {
      return run_analyze(analyze_path, analyze_cap, analyze_format, analyze_out);
    }
    if (bounds_cmd->parsed()) {
      return run_bounds(bounds_cmd, b_n, b_diameter, b_deployed_diameter, b_theta_min,
                        b_theta_max, b_f, b_g, b_b, b_p_die, b_p_link, b_edges, b_mean, b_lambda,
                        b_deleted, bounds_format, bounds_out);
    }
    if (deploy->parsed()) {
      KeyValueConfig cfg;
      if (!deploy_config_path.empty()) {
        std::ifstream in(deploy_config_path);
        if (!in) throw std::runtime_error("cannot open config " + deploy_config_path);
        cfg = KeyValueConfig::parse(in);
      }
      if (deploy->count("--graph")) cfg.set("graph", deploy_graph);
      if (deploy->count("--seed")) cfg.set("seed", std::to_string(d_seed));
      if (deploy->count("--trials")) cfg.set("trials", std::to_string(d_trials));
      if (deploy->count("--max-chain")) cfg.set("max_chain", std::to_string(d_max_chain));
      if (deploy->count("--iterate") || deploy->count("--no-iterate")) {
        cfg.set("iterate", d_iterate ? "true" : "false");
      }
      if (deploy->count("--g")) cfg.set("g", std::to_string(d_g));
      if (deploy->count("--keying")) cfg.set("keying", deploy_keying);
      if (deploy->count("--b")) cfg.set("b", std::to_string(d_b));
      if (deploy->count("--p-die")) cfg.set("p_die", std::to_string(d_p_die));
      if (deploy->count("--threads")) cfg.set("threads", std::to_string(d_threads));
      if (deploy->count("--compromise")) cfg.set("compromise", "true");
      if (deploy->count("--exact-cap")) cfg.set("exact_cap", std::to_string(d_exact_cap));
      const std::string out_dir = deploy_out_dir.empty() ? default_out_dir() : deploy_out_dir;
      return run_deploy_cmd(cfg, out_dir);
    }
    if (compromise->parsed()) {
      return run_compromise(comp_graph, comp_keying, comp_g, comp_seed, comp_victims, comp_trials,
                            comp_format, comp_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
