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

#ifndef KPGRAPH_CONSTRUCTIONS_HPP
#define KPGRAPH_CONSTRUCTIONS_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpgraph/config.hpp"
#include "kpgraph/connectivity.hpp"
#include "kpgraph/graph.hpp"
#include "kpgraph/rng.hpp"

namespace kpgraph {

inline constexpr std::uint64_t kDefaultNodeLimit = std::uint64_t{1} << 20;

inline bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

/// A family of u vectors in Z_q^r (q prime) in which every r-subset is
/// linearly independent, so any difference of vertices decomposes over any
/// r of them.
struct BasisFamily {
  std::uint32_t q = 0;
  std::uint32_t r = 0;
  std::vector<std::vector<std::uint32_t>> vectors;
};

namespace detail {

/// Rank of the given vectors over Z_q (q prime) by Gaussian elimination.
inline std::uint32_t mod_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t q) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  auto mod_pow = [&](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1 % q;
    base %= q;
    while (exp > 0) {
      if (exp & 1) acc = acc * base % q;
      base = base * base % q;
      exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  };
  std::uint32_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint32_t inv = mod_pow(rows[rank][col], q - 2);  // Fermat inverse
    for (std::size_t c = col; c < cols; ++c) {
      rows[rank][c] = static_cast<std::uint32_t>(std::uint64_t{rows[rank][c]} * inv % q);
    }
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || rows[rr][col] == 0) continue;
      const std::uint64_t factor = rows[rr][col];
      for (std::size_t c = col; c < cols; ++c) {
        std::uint64_t sub = factor * rows[rank][c] % q;
        rows[rr][c] = static_cast<std::uint32_t>((rows[rr][c] + q - sub) % q);
      }
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (n > limit / base) {
      throw std::invalid_argument("construction would exceed the node limit of " +
                                  std::to_string(limit) + " vertices");
    }
    n *= base;
  }
  return n;
}

}  // namespace detail

/// Checks the defining property: every r-subset of the family spans Z_q^r.
inline bool all_r_subsets_independent(const BasisFamily& basis) {
  const std::uint32_t r = basis.r;
  const std::size_t u = basis.vectors.size();
  if (u < r) return false;
  for (const auto& v : basis.vectors) {
    if (v.size() != r) return false;
    for (std::uint32_t x : v) {
      if (x >= basis.q) return false;
    }
  }
  std::vector<std::size_t> pick(r);
  for (std::uint32_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<std::uint32_t>> subset;
    subset.reserve(r);
    for (std::size_t idx : pick) subset.push_back(basis.vectors[idx]);
    if (detail::mod_rank(std::move(subset), basis.q) != r) return false;
    // next combination
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == u - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

inline void validate_basis(const BasisFamily& basis) {
  if (!is_prime(basis.q)) throw std::invalid_argument("basis modulus q must be prime");
  if (basis.r < 1) throw std::invalid_argument("basis dimension r must be at least 1");
  if (basis.vectors.size() <= basis.r) {
    throw std::invalid_argument("basis family needs u > r vectors");
  }
  if (!all_r_subsets_independent(basis)) {
    throw std::invalid_argument("basis family has a dependent r-subset");
  }
}

/// Moment-curve family: b_i = (1, a_i, a_i^2, ..., a_i^(r-1)) for u distinct
/// evaluation points a_i in Z_q. Every r-subset is a Vandermonde system with
/// distinct points, hence independent; u <= q bounds the points available.
inline BasisFamily moment_curve_basis(std::uint32_t q, std::uint32_t r, std::uint32_t u) {
  if (!is_prime(q)) throw std::invalid_argument("moment_curve_basis: q must be prime");
  if (r < 1) throw std::invalid_argument("moment_curve_basis: r must be at least 1");
  if (u <= r) throw std::invalid_argument("moment_curve_basis: need u > r vectors");
  if (u > q) {
    throw std::invalid_argument("moment_curve_basis: u > q leaves no distinct evaluation points");
  }
  BasisFamily basis{q, r, {}};
  basis.vectors.reserve(u);
  for (std::uint32_t i = 0; i < u; ++i) {
    std::vector<std::uint32_t> vec(r);
    std::uint64_t power = 1;
    for (std::uint32_t j = 0; j < r; ++j) {
      vec[j] = static_cast<std::uint32_t>(power % q);
      power = power % q * i % q;
    }
    basis.vectors.push_back(std::move(vec));
  }
  if (!all_r_subsets_independent(basis)) {
    throw std::logic_error("moment_curve_basis: independence check failed");
  }
  return basis;
}

/// Sample-and-verify fallback: draws u random vectors until every r-subset
/// is independent.
inline BasisFamily random_basis(std::uint32_t q, std::uint32_t r, std::uint32_t u,
                                std::uint64_t seed, int max_attempts = 1000) {
  if (!is_prime(q)) throw std::invalid_argument("random_basis: q must be prime");
  if (r < 1 || u <= r) throw std::invalid_argument("random_basis: need u > r >= 1");
  if (u > q) throw std::invalid_argument("random_basis: u > q is infeasible");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BasisFamily basis{q, r, {}};
    basis.vectors.reserve(u);
    for (std::uint32_t i = 0; i < u; ++i) {
      std::vector<std::uint32_t> vec(r);
      for (std::uint32_t j = 0; j < r; ++j) {
        vec[j] = static_cast<std::uint32_t>(rng.next_below(q));
      }
      basis.vectors.push_back(std::move(vec));
    }
    if (all_r_subsets_independent(basis)) return basis;
  }
  throw std::runtime_error("random_basis: no valid family found within attempt budget");
}

inline TGraph build_complete(NodeId n) {
  if (n < 2) throw std::invalid_argument("build_complete: need n >= 2");
  TGraph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

/// Prunes K_n: every edge is offered for deletion exactly once, in a
/// seed-determined random order; a deletion sticks iff the graph still has
/// diameter <= diameter_target and >= disjoint_target vertex-disjoint paths
/// between every non-adjacent pair.
inline TGraph build_heuristic(NodeId n, int diameter_target, int disjoint_target,
                              std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("build_heuristic: need n >= 3");
  if (diameter_target < 1) throw std::invalid_argument("build_heuristic: diameter target >= 1");
  if (disjoint_target < 1) throw std::invalid_argument("build_heuristic: disjoint target >= 1");
  if (disjoint_target > static_cast<int>(n) - 2) {
    throw std::invalid_argument(
        "build_heuristic: disjoint target above n-2 fails after the first deletion");
  }

  TGraph g = build_complete(n);
  std::vector<Edge> order = g.edges();
  Rng rng(seed);
  rng.shuffle(order);

  auto within_diameter = [&](NodeId source, int limit) {
    for (int d : bfs_distances(g, source)) {
      if (d == kUnreachable || d > limit) return false;
    }
    return true;
  };

  for (const auto& [u, v] : order) {
    g.remove_edge(u, v);
    // Endpoint eccentricities first: a cheap necessary condition before the
    // full all-pairs pass.
    bool ok = within_diameter(u, diameter_target) && within_diameter(v, diameter_target);
    if (ok) {
      for (NodeId w = 0; w < n && ok; ++w) ok = within_diameter(w, diameter_target);
    }
    if (ok) ok = min_disjoint_paths_at_least(g, disjoint_target);
    if (!ok) g.add_edge(u, v);
  }
  return g;
}

/// Undirected simple de Bruijn graph on r-strings over a q-ary alphabet:
/// (a_1..a_r) adjacent to (a_2..a_r, b). Self-loops on constant strings are
/// dropped and parallel shift pairs merged, so degrees are <= 2q and the
/// diameter is exactly r.
inline TGraph build_de_bruijn(std::uint32_t q, std::uint32_t r,
                              std::uint64_t node_limit = kDefaultNodeLimit) {
  if (q < 2) throw std::invalid_argument("build_de_bruijn: need q >= 2");
  if (r < 1) throw std::invalid_argument("build_de_bruijn: need r >= 1");
  const std::uint64_t n = detail::checked_pow(q, r, node_limit);
  TGraph g(static_cast<NodeId>(n));
  for (std::uint64_t id = 0; id < n; ++id) {
    const std::uint64_t shifted = id * q % n;
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint64_t succ = shifted + b;
      if (succ != id) g.add_edge(static_cast<NodeId>(id), static_cast<NodeId>(succ));
    }
  }
  return g;
}

/// Cayley-style variant on Z_q^r: vertex a is adjacent to a + x*b_i for all
/// x in Z_q^* and every family vector b_i. For r >= 2 the u(q-1) offsets are
/// pairwise distinct, so the graph is u(q-1)-regular with diameter <= r.
inline TGraph build_de_bruijn_variant(const BasisFamily& basis,
                                      std::uint64_t node_limit = kDefaultNodeLimit) {
  validate_basis(basis);
  const std::uint32_t q = basis.q;
  const std::uint32_t r = basis.r;
  const std::uint64_t n = detail::checked_pow(q, r, node_limit);

  // Distinct neighbor offsets x*b_i, encoded in base q.
  std::set<std::uint64_t> offsets;
  for (const auto& vec : basis.vectors) {
    for (std::uint32_t x = 1; x < q; ++x) {
      std::uint64_t code = 0;
      for (std::uint32_t j = r; j-- > 0;) {
        code = code * q + static_cast<std::uint64_t>(vec[j]) * x % q;
      }
      offsets.insert(code);
    }
  }

  std::vector<std::uint32_t> digits(r);
  std::vector<std::uint32_t> offset_digits(r);
  TGraph g(static_cast<NodeId>(n));
  for (std::uint64_t id = 0; id < n; ++id) {
    std::uint64_t tmp = id;
    for (std::uint32_t j = 0; j < r; ++j) {
      digits[j] = static_cast<std::uint32_t>(tmp % q);
      tmp /= q;
    }
    for (std::uint64_t code : offsets) {
      std::uint64_t oc = code;
      for (std::uint32_t j = 0; j < r; ++j) {
        offset_digits[j] = static_cast<std::uint32_t>(oc % q);
        oc /= q;
      }
      std::uint64_t neighbor = 0;
      for (std::uint32_t j = r; j-- > 0;) {
        neighbor = neighbor * q + (digits[j] + offset_digits[j]) % q;
      }
      g.add_edge(static_cast<NodeId>(id), static_cast<NodeId>(neighbor));
    }
  }
  return g;
}

/// G(n, p): every unordered pair is an edge independently with probability p.
inline TGraph build_random_gnp(NodeId n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("build_random_gnp: p outside [0, 1]");
  TGraph g(n);
  Rng rng(seed);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Construction specs: a small tagged parameter record, serializable as
// plain-text key = value config.
// ---------------------------------------------------------------------------

enum class ConstructionKind { complete, heuristic, de_bruijn, de_bruijn_variant, random_gnp };

inline std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::complete: return "complete";
    case ConstructionKind::heuristic: return "heuristic";
    case ConstructionKind::de_bruijn: return "de_bruijn";
    case ConstructionKind::de_bruijn_variant: return "de_bruijn_variant";
    case ConstructionKind::random_gnp: return "random_gnp";
  }
  throw std::logic_error("unknown construction kind");
}

inline ConstructionKind construction_kind_from_string(const std::string& s) {
  if (s == "complete") return ConstructionKind::complete;
  if (s == "heuristic") return ConstructionKind::heuristic;
  if (s == "de_bruijn" || s == "de-bruijn") return ConstructionKind::de_bruijn;
  if (s == "de_bruijn_variant" || s == "variant") return ConstructionKind::de_bruijn_variant;
  if (s == "random_gnp" || s == "gnp") return ConstructionKind::random_gnp;
  throw std::invalid_argument("unknown construction kind '" + s + "'");
}

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::complete;
  NodeId n = 0;          // complete, heuristic, random_gnp
  int diameter = 0;      // heuristic: target D
  int disjoint = 0;      // heuristic: target f
  std::uint32_t q = 0;   // de_bruijn, de_bruijn_variant
  std::uint32_t r = 0;   // de_bruijn, de_bruijn_variant
  std::uint32_t u = 0;   // de_bruijn_variant
  double p = 0.0;        // random_gnp
  std::uint64_t seed = 0;
  std::uint64_t node_limit = kDefaultNodeLimit;
};

inline TGraph build(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::complete:
      return build_complete(spec.n);
    case ConstructionKind::heuristic:
      return build_heuristic(spec.n, spec.diameter, spec.disjoint, spec.seed);
    case ConstructionKind::de_bruijn:
      return build_de_bruijn(spec.q, spec.r, spec.node_limit);
    case ConstructionKind::de_bruijn_variant:
      return build_de_bruijn_variant(moment_curve_basis(spec.q, spec.r, spec.u),
                                     spec.node_limit);
    case ConstructionKind::random_gnp:
      return build_random_gnp(spec.n, spec.p, spec.seed);
  }
  throw std::logic_error("unknown construction kind");
}

inline KeyValueConfig to_config(const ConstructionSpec& spec) {
  KeyValueConfig cfg;
  cfg.set("kind", to_string(spec.kind));
  switch (spec.kind) {
    case ConstructionKind::complete:
      cfg.set("n", std::to_string(spec.n));
      break;
    case ConstructionKind::heuristic:
      cfg.set("n", std::to_string(spec.n));
      cfg.set("diameter", std::to_string(spec.diameter));
      cfg.set("disjoint", std::to_string(spec.disjoint));
      cfg.set("seed", std::to_string(spec.seed));
      break;
    case ConstructionKind::de_bruijn:
      cfg.set("q", std::to_string(spec.q));
      cfg.set("r", std::to_string(spec.r));
      break;
    case ConstructionKind::de_bruijn_variant:
      cfg.set("q", std::to_string(spec.q));
      cfg.set("r", std::to_string(spec.r));
      cfg.set("u", std::to_string(spec.u));
      break;
    case ConstructionKind::random_gnp:
      cfg.set("n", std::to_string(spec.n));
      cfg.set("p", std::to_string(spec.p));
      cfg.set("seed", std::to_string(spec.seed));
      break;
  }
  return cfg;
}

inline ConstructionSpec spec_from_config(const KeyValueConfig& cfg) {
  ConstructionSpec spec;
  spec.kind = construction_kind_from_string(cfg.get_string("kind"));
  switch (spec.kind) {
    case ConstructionKind::complete:
      spec.n = static_cast<NodeId>(cfg.get_uint("n"));
      break;
    case ConstructionKind::heuristic:
      spec.n = static_cast<NodeId>(cfg.get_uint("n"));
      spec.diameter = static_cast<int>(cfg.get_int("diameter"));
      spec.disjoint = static_cast<int>(cfg.get_int("disjoint"));
      spec.seed = cfg.get_uint("seed", 0);
      break;
    case ConstructionKind::de_bruijn:
      spec.q = static_cast<std::uint32_t>(cfg.get_uint("q"));
      spec.r = static_cast<std::uint32_t>(cfg.get_uint("r"));
      break;
    case ConstructionKind::de_bruijn_variant:
      spec.q = static_cast<std::uint32_t>(cfg.get_uint("q"));
      spec.r = static_cast<std::uint32_t>(cfg.get_uint("r"));
      spec.u = static_cast<std::uint32_t>(cfg.get_uint("u"));
      break;
    case ConstructionKind::random_gnp:
      spec.n = static_cast<NodeId>(cfg.get_uint("n"));
      spec.p = cfg.get_double("p");
      spec.seed = cfg.get_uint("seed", 0);
      break;
  }
  spec.node_limit = cfg.get_uint("node_limit", kDefaultNodeLimit);
  return spec;
}

}  // namespace kpgraph

#endif  // KPGRAPH_CONSTRUCTIONS_HPP
