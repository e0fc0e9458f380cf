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

#ifndef KPGRAPH_BOUNDS_HPP
#define KPGRAPH_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace kpgraph::bounds {

// Closed-form bounds relating key storage (vertex degree), key path length
// (diameter / mean distance), deployment survival and compromise spread.
// Every function is pure. Inputs outside a bound's precondition yield an
// inapplicable result (std::optional or BoundsReport.applicable == false)
// rather than an exception; structurally invalid inputs throw.

enum class Direction { lower, upper };

inline std::string to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

/// One evaluated bound, ready for CSV/JSON emission.
struct BoundsReport {
  std::string name;
  Direction direction = Direction::lower;
  double value = 0.0;
  bool applicable = false;
  std::string reason;  // empty when applicable
  std::string inputs;  // echo of the inputs, "k=v k=v ..."
};

inline std::string bounds_csv_header() { return "name,direction,value,applicable,reason,inputs"; }

inline std::string to_csv_row(const BoundsReport& r) {
  std::ostringstream out;
  out << r.name << ',' << to_string(r.direction) << ',';
  if (r.applicable) out << r.value;
  out << ',' << (r.applicable ? "true" : "false") << ',' << r.reason << ',' << r.inputs;
  return out.str();
}

inline nlohmann::json to_json(const BoundsReport& r) {
  nlohmann::json j{{"name", r.name},
                   {"direction", to_string(r.direction)},
                   {"applicable", r.applicable},
                   {"reason", r.reason},
                   {"inputs", r.inputs}};
  if (r.applicable) {
    j["value"] = r.value;
  } else {
    j["value"] = nullptr;
  }
  return j;
}

/// Minimum storage forced by a Moore-style counting argument: a node reaches
/// at most theta*(theta-1)^(i-1) new nodes at hop i, so covering n nodes
/// within D hops needs theta_max >= 1 + n^(1/D). Derivation assumes
/// theta_max > 2; D = 1 (complete graph) is degenerate for it.
inline double moore_storage_lower(double n, int diameter) {
  if (n < 2) throw std::invalid_argument("moore_storage_lower: need n >= 2");
  if (diameter < 1) throw std::invalid_argument("moore_storage_lower: need D >= 1");
  return 1.0 + std::pow(n, 1.0 / diameter);
}

/// Storage lower bound when every non-adjacent pair must keep `disjoint`
/// vertex-disjoint acquaintance chains: 1 + (f*n)^(1/D).
inline double moore_storage_lower_disjoint(double n, int diameter, int disjoint) {
  if (n < 2) throw std::invalid_argument("moore_storage_lower_disjoint: need n >= 2");
  if (diameter < 1) throw std::invalid_argument("moore_storage_lower_disjoint: need D >= 1");
  if (disjoint < 1) throw std::invalid_argument("moore_storage_lower_disjoint: need f >= 1");
  return 1.0 + std::pow(static_cast<double>(disjoint) * n, 1.0 / diameter);
}

/// Minimum degree keeping the deployed graph connected after the expected
/// (1 - p_link)*|E| edge deletions: ceil((1 - p_link)*|E|) + 1. Degree is
/// integral, so the fractional expectation is rounded up.
inline long long min_degree_for_connectivity(double p_link, std::uint64_t edge_count) {
  if (p_link < 0.0 || p_link > 1.0) {
    throw std::invalid_argument("min_degree_for_connectivity: p_link outside [0, 1]");
  }
  const double expected_deleted = (1.0 - p_link) * static_cast<double>(edge_count);
  // Nudge below the exact value so representation error in p_link cannot
  // push an integral expectation up to the next integer.
  return static_cast<long long>(std::ceil(expected_deleted - 1e-9)) + 1;
}

/// Diameter after deleting t edges from a (t+1) edge-connected graph:
/// D' <= (t+1)*D + t. The connectivity precondition is the caller's.
inline long long edge_deletion_diameter(int diameter, int deleted) {
  if (diameter < 1) throw std::invalid_argument("edge_deletion_diameter: need D >= 1");
  if (deleted < 1) throw std::invalid_argument("edge_deletion_diameter: need t >= 1");
  return static_cast<long long>(deleted + 1) * diameter + deleted;
}

/// Diameter after deleting t vertices from a lambda vertex-connected graph:
/// D' <= floor((n-t-2)/(lambda-t)) + 1. Inapplicable when t >= lambda or
/// n <= t + 2.
inline std::optional<long long> vertex_deletion_diameter(std::uint64_t n, int lambda,
                                                         int deleted) {
  if (lambda < 1) throw std::invalid_argument("vertex_deletion_diameter: need lambda >= 1");
  if (deleted < 0) throw std::invalid_argument("vertex_deletion_diameter: need t >= 0");
  if (deleted >= lambda) return std::nullopt;
  if (n <= static_cast<std::uint64_t>(deleted) + 2) return std::nullopt;
  const long long numer = static_cast<long long>(n) - deleted - 2;
  return numer / (lambda - deleted) + 1;
}

/// Mean-distance increase of the deployed graph over physical-neighbor
/// pairs, for a trust graph whose non-adjacent pairs keep `disjoint`
/// redundant shortest chains:
///   d_DT <= d_T + (D_DT - 2) * (1 - theta_min/(n-1)) * P,
///   P = [1 - (1-p_die)^(D_T-1) * (b/(n-1))^D_T]^f.
/// Inapplicable when the deployed diameter is below 2 (the distance-increase
/// step needs a non-adjacent pair).
inline std::optional<double> deployed_mean_distance_bound(double mean_dist, int diameter,
                                                          int deployed_diameter, int theta_min,
                                                          std::uint64_t n, double b, double p_die,
                                                          int disjoint) {
  if (n < 2) throw std::invalid_argument("deployed_mean_distance_bound: need n >= 2");
  if (diameter < 1) throw std::invalid_argument("deployed_mean_distance_bound: need D_T >= 1");
  if (theta_min < 0) throw std::invalid_argument("deployed_mean_distance_bound: theta_min < 0");
  if (p_die < 0.0 || p_die >= 1.0) {
    throw std::invalid_argument("deployed_mean_distance_bound: p_die outside [0, 1)");
  }
  if (b < 0.0 || b > static_cast<double>(n - 1)) {
    throw std::invalid_argument("deployed_mean_distance_bound: b outside [0, n-1]");
  }
  if (disjoint < 1) throw std::invalid_argument("deployed_mean_distance_bound: need f >= 1");
  if (deployed_diameter < 2) return std::nullopt;

  const double survive_one = std::pow(1.0 - p_die, diameter - 1) *
                             std::pow(b / static_cast<double>(n - 1), diameter);
  const double all_fail = std::pow(1.0 - survive_one, disjoint);
  const double non_neighbor = 1.0 - static_cast<double>(theta_min) / static_cast<double>(n - 1);
  return mean_dist + (deployed_diameter - 2) * non_neighbor * all_fail;
}

struct MeanDistanceBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Mean-distance sandwich for graphs with both degrees above 2:
///   d_L = D - theta_max*(theta_max-1)^D / ((n-1)*(theta_max-2)^2)
///   d_U = D - [(theta_min-1)^D - (D+1)] / ((n-1)*(theta_min-2)).
inline std::optional<MeanDistanceBounds> mean_distance_bounds(std::uint64_t n, int diameter,
                                                              int theta_min, int theta_max) {
  if (n < 2) throw std::invalid_argument("mean_distance_bounds: need n >= 2");
  if (diameter < 1) throw std::invalid_argument("mean_distance_bounds: need D >= 1");
  if (theta_min < 0 || theta_max < theta_min) {
    throw std::invalid_argument("mean_distance_bounds: bad degree pair");
  }
  if (theta_min <= 2 || theta_max <= 2) return std::nullopt;

  const double nm1 = static_cast<double>(n - 1);
  const double lower = diameter - static_cast<double>(theta_max) /
                                      (nm1 * (theta_max - 2.0) * (theta_max - 2.0)) *
                                      std::pow(theta_max - 1.0, diameter);
  const double upper =
      diameter - (std::pow(theta_min - 1.0, diameter) - (diameter + 1.0)) /
                     (nm1 * (theta_min - 2.0));
  return MeanDistanceBounds{lower, upper};
}

/// Fraction of trust links unusable after one node's key ring leaks, when
/// each key is reused on at most `reuse_limit` incident edges. Evaluated
/// through the geometric cascade sum
///   n' = theta_max * sum_{i=0}^{D-1} (g-1)^i,   p < n'*g / (n*theta_min),
/// which stays well-defined for g in {1, 2}; for g > 2 it equals the closed
/// form g/(g-2) * theta_max/(n*theta_min) * [(g-1)^D - 1].
inline double compromise_fraction_bound(std::uint64_t n, int diameter, int theta_min,
                                        int theta_max, int reuse_limit) {
  if (reuse_limit <= 0) throw std::invalid_argument("compromise_fraction_bound: need g >= 1");
  if (n < 1) throw std::invalid_argument("compromise_fraction_bound: need n >= 1");
  if (diameter < 1) throw std::invalid_argument("compromise_fraction_bound: need D >= 1");
  if (theta_min < 1 || theta_max < theta_min) {
    throw std::invalid_argument("compromise_fraction_bound: bad degree pair");
  }
  double reached = 0.0;
  double term = 1.0;
  for (int i = 0; i < diameter; ++i) {
    reached += term;
    term *= reuse_limit - 1;
  }
  const double affected_nodes = theta_max * reached;
  return affected_nodes * reuse_limit / (static_cast<double>(n) * theta_min);
}

struct ProbabilityBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Degree-based envelope for the probability that a random node pair is a
/// trusted edge after deployment:
///   (1-p_die)^2 * b*theta_min/(n-1)^2 <= p_c <= (1-p_die)^2 * b*theta_max/(n-1)^2.
inline ProbabilityBounds trusted_link_probability_bounds(std::uint64_t n, double b, double p_die,
                                                         int theta_min, int theta_max) {
  if (n < 2) throw std::invalid_argument("trusted_link_probability_bounds: need n >= 2");
  if (p_die < 0.0 || p_die > 1.0) {
    throw std::invalid_argument("trusted_link_probability_bounds: p_die outside [0, 1]");
  }
  if (b < 0.0 || b > static_cast<double>(n - 1)) {
    throw std::invalid_argument("trusted_link_probability_bounds: b outside [0, n-1]");
  }
  if (theta_min < 0 || theta_max < theta_min) {
    throw std::invalid_argument("trusted_link_probability_bounds: bad degree pair");
  }
  const double nm1 = static_cast<double>(n - 1);
  const double scale = (1.0 - p_die) * (1.0 - p_die) * b / (nm1 * nm1);
  return ProbabilityBounds{scale * theta_min, scale * theta_max};
}

// ---------------------------------------------------------------------------
// Report builders: same math, packaged with applicability and input echo for
// sweep output.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string echo(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

inline BoundsReport report_moore_storage_lower(std::uint64_t n, int diameter) {
  BoundsReport r{"moore_storage_lower", Direction::lower, 0.0, true, "",
                 detail::echo({{"n", std::to_string(n)}, {"D", std::to_string(diameter)}})};
  r.value = moore_storage_lower(static_cast<double>(n), diameter);
  if (diameter == 1) {
    r.reason = "degenerate: D=1 forces a complete graph; counting argument needs theta_max > 2";
    r.applicable = false;
  }
  return r;
}

inline BoundsReport report_moore_storage_lower_disjoint(std::uint64_t n, int diameter,
                                                        int disjoint) {
  BoundsReport r{"moore_storage_lower_disjoint", Direction::lower, 0.0, true, "",
                 detail::echo({{"n", std::to_string(n)},
                               {"D", std::to_string(diameter)},
                               {"f", std::to_string(disjoint)}})};
  r.value = moore_storage_lower_disjoint(static_cast<double>(n), diameter, disjoint);
  if (diameter == 1) {
    r.reason = "degenerate: D=1 forces a complete graph; counting argument needs theta_max > 2";
    r.applicable = false;
  }
  return r;
}

inline BoundsReport report_min_degree_for_connectivity(double p_link, std::uint64_t edge_count) {
  BoundsReport r{"min_degree_for_connectivity", Direction::lower, 0.0, true, "",
                 detail::echo({{"p_link", detail::fmt(p_link)},
                               {"edges", std::to_string(edge_count)}})};
  r.value = static_cast<double>(min_degree_for_connectivity(p_link, edge_count));
  return r;
}

inline BoundsReport report_edge_deletion_diameter(int diameter, int deleted) {
  BoundsReport r{"edge_deletion_diameter", Direction::upper, 0.0, true, "",
                 detail::echo({{"D", std::to_string(diameter)}, {"t", std::to_string(deleted)}})};
  r.value = static_cast<double>(edge_deletion_diameter(diameter, deleted));
  r.reason = "";
  return r;
}

inline BoundsReport report_vertex_deletion_diameter(std::uint64_t n, int lambda, int deleted) {
  BoundsReport r{"vertex_deletion_diameter", Direction::upper, 0.0, false, "",
                 detail::echo({{"n", std::to_string(n)},
                               {"lambda", std::to_string(lambda)},
                               {"t", std::to_string(deleted)}})};
  if (auto v = vertex_deletion_diameter(n, lambda, deleted)) {
    r.applicable = true;
    r.value = static_cast<double>(*v);
  } else {
    r.reason = "needs t < lambda and n > t+2";
  }
  return r;
}

inline BoundsReport report_deployed_mean_distance_bound(double mean_dist, int diameter,
                                                        int deployed_diameter, int theta_min,
                                                        std::uint64_t n, double b, double p_die,
                                                        int disjoint) {
  BoundsReport r{"deployed_mean_distance", Direction::upper, 0.0, false, "",
                 detail::echo({{"d_bar", detail::fmt(mean_dist)},
                               {"D_T", std::to_string(diameter)},
                               {"D_DT", std::to_string(deployed_diameter)},
                               {"theta_min", std::to_string(theta_min)},
                               {"n", std::to_string(n)},
                               {"b", detail::fmt(b)},
                               {"p_die", detail::fmt(p_die)},
                               {"f", std::to_string(disjoint)}})};
  if (auto v = deployed_mean_distance_bound(mean_dist, diameter, deployed_diameter, theta_min, n,
                                            b, p_die, disjoint)) {
    r.applicable = true;
    r.value = *v;
  } else {
    r.reason = "needs deployed diameter >= 2";
  }
  return r;
}

inline BoundsReport report_mean_distance_lower(std::uint64_t n, int diameter, int theta_min,
                                               int theta_max) {
  BoundsReport r{"mean_distance_lower", Direction::lower, 0.0, false, "",
                 detail::echo({{"n", std::to_string(n)},
                               {"D", std::to_string(diameter)},
                               {"theta_min", std::to_string(theta_min)},
                               {"theta_max", std::to_string(theta_max)}})};
  if (auto v = mean_distance_bounds(n, diameter, theta_min, theta_max)) {
    r.applicable = true;
    r.value = v->lower;
  } else {
    r.reason = "needs theta_min > 2 and theta_max > 2";
  }
  return r;
}

inline BoundsReport report_mean_distance_upper(std::uint64_t n, int diameter, int theta_min,
                                               int theta_max) {
  BoundsReport r = report_mean_distance_lower(n, diameter, theta_min, theta_max);
  r.name = "mean_distance_upper";
  r.direction = Direction::upper;
  if (r.applicable) {
    r.value = mean_distance_bounds(n, diameter, theta_min, theta_max)->upper;
  }
  return r;
}

inline BoundsReport report_compromise_fraction(std::uint64_t n, int diameter, int theta_min,
                                               int theta_max, int reuse_limit) {
  BoundsReport r{"compromise_fraction", Direction::upper, 0.0, true, "",
                 detail::echo({{"n", std::to_string(n)},
                               {"D", std::to_string(diameter)},
                               {"theta_min", std::to_string(theta_min)},
                               {"theta_max", std::to_string(theta_max)},
                               {"g", std::to_string(reuse_limit)}})};
  r.value = compromise_fraction_bound(n, diameter, theta_min, theta_max, reuse_limit);
  return r;
}

inline BoundsReport report_trusted_link_probability_lower(std::uint64_t n, double b, double p_die,
                                                          int theta_min, int theta_max) {
  BoundsReport r{"trusted_link_probability_lower", Direction::lower, 0.0, true, "",
                 detail::echo({{"n", std::to_string(n)},
                               {"b", detail::fmt(b)},
                               {"p_die", detail::fmt(p_die)},
                               {"theta_min", std::to_string(theta_min)},
                               {"theta_max", std::to_string(theta_max)}})};
  r.value = trusted_link_probability_bounds(n, b, p_die, theta_min, theta_max).lower;
  return r;
}

inline BoundsReport report_trusted_link_probability_upper(std::uint64_t n, double b, double p_die,
                                                          int theta_min, int theta_max) {
  BoundsReport r = report_trusted_link_probability_lower(n, b, p_die, theta_min, theta_max);
  r.name = "trusted_link_probability_upper";
  r.direction = Direction::upper;
  r.value = trusted_link_probability_bounds(n, b, p_die, theta_min, theta_max).upper;
  return r;
}

}  // namespace kpgraph::bounds

#endif  // KPGRAPH_BOUNDS_HPP
