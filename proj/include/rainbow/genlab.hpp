// Copyright 2026 The Rainbow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/characterize.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Small fixed families

inline Graph gen_path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

inline Graph gen_cycle(int k) {
  if (k < 3) throw Error(Errc::infeasible_params, "a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
  return Graph(k, pairs);
}

inline Graph gen_complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph(n, pairs);
}

/// Θ-graph with path lengths a, b, c between vertices 0 and 1.
inline Graph gen_theta(int a, int b, int c) {
  std::array<int, 3> len{a, b, c};
  std::sort(len.begin(), len.end());
  if (len[0] < 1 || len[1] < 2) {
    throw Error(Errc::infeasible_params, "theta paths need lengths a>=1, b>=2 for a simple graph");
  }
  std::vector<std::pair<int, int>> pairs;
  int next = 2;
  for (int l : len) {
    int prev = 0;
    for (int i = 0; i < l; ++i) {
      const int to = (i + 1 == l) ? 1 : next++;
      pairs.emplace_back(prev, to);
      prev = to;
    }
  }
  return Graph(next, pairs);
}

/// K4-e on v1..v4 = 0..3 (v1,v3 adjacent of degree 3) with a path of length
/// p2 at v2 and p4 at v4.
inline Graph gen_m_class(int p2, int p4) {
  if (p2 < 0 || p4 < 0) throw Error(Errc::infeasible_params, "path lengths must be >= 0");
  std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  int next = 4;
  for (auto [root, len] : {std::pair{1, p2}, std::pair{3, p4}}) {
    int prev = root;
    for (int i = 0; i < len; ++i) {
      pairs.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, pairs);
}

// ---------------------------------------------------------------------------
// Unicyclic enumeration

/// Canonical level sequences (root at level 0) of all rooted trees with
/// `vertices` vertices, in the successor order of Beyer and Hedetniemi.
inline std::vector<std::vector<int>> rooted_trees(int vertices) {
  std::vector<std::vector<int>> out;
  if (vertices < 1) return out;
  const auto n = static_cast<std::size_t>(vertices);
  std::vector<int> level(n);
  std::iota(level.begin(), level.end(), 1);
  while (true) {
    auto& seq = out.emplace_back(level);
    for (int& x : seq) --x;
    std::size_t p = n;
    while (p > 0 && level[p - 1] <= 2) --p;
    if (p == 0) break;
    --p;
    std::size_t q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

/// A cycle of length `girth` with a rooted tree (level sequence) at each
/// cycle vertex.
struct UnicyclicSpec {
  int girth = 3;
  std::vector<std::vector<int>> trees;

  int n() const {
    int total = girth;
    for (const auto& t : trees) total += static_cast<int>(t.size()) - 1;
    return total;
  }
  int m() const { return n(); }

  /// Cycle vertices are 0..girth-1 and cycle edges come first.
  Graph build() const {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < girth; ++i) pairs.emplace_back(i, (i + 1) % girth);
    int next = girth;
    for (int root = 0; root < girth; ++root) {
      const auto& levels = trees[static_cast<std::size_t>(root)];
      std::vector<int> id(levels.size());
      id[0] = root;
      for (std::size_t i = 1; i < levels.size(); ++i) {
        id[i] = next++;
        std::size_t parent = i - 1;
        while (levels[parent] != levels[i] - 1) --parent;
        pairs.emplace_back(id[parent], id[i]);
      }
    }
    return Graph(next, pairs);
  }
};

inline constexpr int kMaxEnumerationOrder = 12;

/// Calls fn(spec, graph) for unicyclic graphs with n <= max_n (optionally a
/// single girth). Every isomorphism class appears at least once; duplicates
/// under symmetry are emitted.
inline void for_each_unicyclic(int max_n, std::optional<int> girth_filter,
                               const std::function<void(const UnicyclicSpec&, const Graph&)>& fn) {
  if (max_n > kMaxEnumerationOrder) {
    throw Error(Errc::too_large, "enumeration is limited to n <= 12");
  }
  std::vector<std::vector<std::vector<int>>> shapes(static_cast<std::size_t>(std::max(max_n, 1)) + 1);
  for (int k = 1; k <= max_n; ++k) shapes[static_cast<std::size_t>(k)] = rooted_trees(k);

  for (int s = 3; s <= max_n; ++s) {
    if (girth_filter && *girth_filter != s) continue;
    for (int n = s; n <= max_n; ++n) {
      UnicyclicSpec spec{s, std::vector<std::vector<int>>(static_cast<std::size_t>(s))};
      std::vector<int> extra(static_cast<std::size_t>(s), 0);
      // Choose a tree per cycle vertex; tree sizes sum to n - s extra vertices.
      std::function<void(int, int)> place = [&](int slot, int left) {
        if (slot == s) {
          if (left == 0) fn(spec, spec.build());
          return;
        }
        const int lo = slot + 1 == s ? left : 0;
        for (int k = lo; k <= left; ++k) {
          for (const auto& shape : shapes[static_cast<std::size_t>(k + 1)]) {
            spec.trees[static_cast<std::size_t>(slot)] = shape;
            place(slot + 1, left - k);
          }
        }
      };
      place(0, n - s);
    }
  }
}

inline std::vector<Graph> enum_unicyclic(int max_n, std::optional<int> girth_filter = std::nullopt) {
  std::vector<Graph> out;
  for_each_unicyclic(max_n, girth_filter,
                     [&](const UnicyclicSpec&, const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Random generators (deterministic per seed)

namespace detail {

inline Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto pairs = g.pairs();
  for (auto& [u, v] : pairs) {
    u = perm[static_cast<std::size_t>(u)];
    v = perm[static_cast<std::size_t>(v)];
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return Graph(g.order(), pairs);
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace detail

inline Graph gen_random_unicyclic(std::uint64_t seed, int n, int girth) {
  if (girth < 3 || girth > n) {
    throw Error(Errc::infeasible_params, "need 3 <= girth <= n, got girth=" +
                                             std::to_string(girth) + " n=" + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < girth; ++i) pairs.emplace_back(i, (i + 1) % girth);
  for (int v = girth; v < n; ++v) pairs.emplace_back(detail::uniform(rng, 0, v - 1), v);
  return detail::relabel(Graph(n, pairs), rng);
}

inline Graph gen_random_tree(std::uint64_t seed, int n) {
  if (n < 1) throw Error(Errc::infeasible_params, "a tree needs a vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(detail::uniform(rng, 0, v - 1), v);
  return detail::relabel(Graph(n, pairs), rng);
}

/// Random connected graph: a random spanning tree plus extra random edges.
inline Graph gen_random_connected(std::uint64_t seed, int n, int m) {
  if (n < 1 || m < n - 1 || static_cast<long>(m) > static_cast<long>(n) * (n - 1) / 2) {
    throw Error(Errc::infeasible_params, "no connected simple graph with these n, m");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int v = 1; v < n; ++v) {
    const int u = detail::uniform(rng, 0, v - 1);
    pairs.emplace_back(u, v);
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  std::vector<std::pair<int, int>> missing;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) missing.emplace_back(u, v);
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  for (int i = 0; static_cast<int>(pairs.size()) < m; ++i) pairs.push_back(missing[static_cast<std::size_t>(i)]);
  return detail::relabel(Graph(n, pairs), rng);
}

/// Random Θ-graph with exactly m edges (m >= 5).
inline Graph gen_random_theta(std::uint64_t seed, int m) {
  if (m < 5) throw Error(Errc::infeasible_params, "a theta graph has at least 5 edges");
  std::mt19937_64 rng(seed);
  while (true) {
    const int a = detail::uniform(rng, 1, m - 3);
    const int b = detail::uniform(rng, 2, m - a - 1);
    const int c = m - a - b;
    if (c < 2 || (a == 1 && b == 1) || (a == 1 && c == 1) || (b == 1 && c == 1)) continue;
    return detail::relabel(gen_theta(a, b, c), rng);
  }
}

// ---------------------------------------------------------------------------
// Cross-check harness

struct Mismatch {
  std::string graph;
  std::string predicted;
  std::string oracle;

  auto operator<=>(const Mismatch&) const = default;
};

struct CheckReport {
  std::uint64_t graphs_examined = 0;
  std::map<std::string, int> class_counts;
  std::vector<Mismatch> mismatches;  // sorted
  int budget_exhaustions = 0;

  bool success() const { return mismatches.empty(); }
};

namespace detail {

inline std::string render(const RcResult& r) {
  if (const auto* e = std::get_if<ExactRc>(&r)) return "exact " + std::to_string(e->value);
  const auto& b = std::get<RcBounds>(r);
  return "bounds [" + std::to_string(b.lower) + "," + std::to_string(b.upper) + "]";
}

// Ground-truth position of rc relative to m from exhaustive band checks:
// "m", "m-2", "m-3" or "<=m-4".
inline std::string band_truth(const Graph& g, std::uint64_t budget) {
  const int m = g.size();
  std::vector<int> ks;
  for (int k : {m - 1, m - 2, m - 3, m - 4}) {
    if (k >= 1) ks.push_back(k);
  }
  const auto band = rc_band(g, ks, budget);
  auto feasible = [&](int k) { return k < 1 ? false : band.at(k).feasible; };
  if (!feasible(m - 1)) return "m";
  if (!feasible(m - 2)) return "m-1";
  if (!feasible(m - 3)) return "m-2";
  if (!feasible(m - 4)) return "m-3";
  return "<=m-4";
}

}  // namespace detail

/// Checks one graph: the characterized result against exhaustive search,
/// and (for unicyclic and K4-e-block graphs) family membership against the
/// band ground truth. Appends to `report`.
inline void check_graph(const Graph& g, std::uint64_t budget, CheckReport& report) {
  ++report.graphs_examined;
  try {
    const auto label = class_label(g);
    ++report.class_counts[label.tag()];
    const auto result = rc_characterize(g, budget);
    const int m = g.size();

    std::optional<std::string> problem;
    if (const auto* e = std::get_if<ExactRc>(&result)) {
      if (e->certificate.num_colors() != e->value || !is_rainbow_connected(g, e->certificate)) {
        problem = "certificate invalid";
      } else if (e->value >= 2 && feasible_k(g, e->value - 1, budget)) {
        problem = "feasible with " + std::to_string(e->value - 1) + " colors";
      }
    } else {
      const auto& b = std::get<RcBounds>(result);
      if (!feasible_k(g, b.upper, budget)) {
        problem = "infeasible with " + std::to_string(b.upper) + " colors";
      } else if (b.lower >= 2 && feasible_k(g, b.lower - 1, budget)) {
        problem = "feasible with " + std::to_string(b.lower - 1) + " colors";
      }
    }

    const auto report_structure = structure_report(g);
    if (!problem && m >= 3 && !report_structure.is_tree &&
        (report_structure.cyclomatic == 1 || label.kind == LabelKind::MClass ||
         label.kind == LabelKind::K4eNonM)) {
      const auto truth = detail::band_truth(g, budget);
      const bool fam2 = in_m_minus_2_family(g);
      const bool fam3 = in_m_minus_3_family(g);
      if (fam2 != (truth == "m-2") || fam3 != (truth == "m-3")) {
        problem = "rc is " + truth + " but family membership is m-2:" + (fam2 ? "yes" : "no") +
                  " m-3:" + (fam3 ? "yes" : "no");
      }
    }
    if (problem) {
      report.mismatches.push_back({describe(g), label.display() + " " + detail::render(result), *problem});
    }
  } catch (const BudgetExceeded&) {
    ++report.budget_exhaustions;
  } catch (const Error& err) {
    report.mismatches.push_back({describe(g), "error", err.what()});
  }
}

/// Corpus: every unicyclic graph with n <= max_n, K4-e with paths of
/// length 0..max_n-4 at its degree-2 vertices, and cycles up to C12.
inline CheckReport check_theorems(int max_n, std::uint64_t budget = kDefaultBudget) {
  CheckReport report;
  for_each_unicyclic(max_n, std::nullopt,
                     [&](const UnicyclicSpec&, const Graph& g) { check_graph(g, budget, report); });
  for (int p2 = 0; p2 <= max_n - 4; ++p2) {
    for (int p4 = 0; p4 <= max_n - 4; ++p4) check_graph(gen_m_class(p2, p4), budget, report);
  }
  for (int k = std::max(3, max_n + 1); k <= 12; ++k) check_graph(gen_cycle(k), budget, report);
  std::sort(report.mismatches.begin(), report.mismatches.end());
  return report;
}

}  // namespace rainbow
