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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

struct LowerBound {
  int value = 1;
  std::string reason;  // "diameter", "bridges" or "nontrivial"
};

struct ExactRc {
  int value = 0;
  EdgeColoring certificate;
  std::string reason;
};

struct RcBounds {
  int lower = 0;
  int upper = 0;
  std::string lower_reason;
  std::string upper_reason;
};

using RcResult = std::variant<ExactRc, RcBounds>;

namespace detail {

inline void require_rc_input(const Graph& g) {
  if (g.order() < 2) throw Error(Errc::trivial_graph, "rc needs at least two vertices");
  if (!is_connected(g)) throw Error(Errc::disconnected, "rc is defined for connected graphs");
}

}  // namespace detail

/// max(diameter, #bridges, 1). Any rainbow coloring needs diam(G) colors on
/// a shortest path and pairwise distinct colors on cut edges.
inline LowerBound lower_bound(const Graph& g) {
  detail::require_rc_input(g);
  const auto report = structure_report(g);
  const int diameter = *report.diameter;
  const int bridges = static_cast<int>(report.bridges.size());
  if (diameter >= bridges && diameter >= 1) return {diameter, "diameter"};
  if (bridges >= 1) return {bridges, "bridges"};
  return {1, "nontrivial"};
}

namespace detail {

// Searches k-class edge partitions in lexicographic restricted-growth order.
// `examined` accumulates verified partitions across calls.
inline std::optional<EdgeColoring> feasible_k_counted(const Graph& g, int k, std::uint64_t budget,
                                                      std::uint64_t& examined) {
  const int m = g.size();
  if (k < 1 || k > m) {
    throw Error(Errc::k_out_of_band, "k=" + std::to_string(k) + " outside 1.." + std::to_string(m));
  }
  if (k > kMaxColors) throw Error(Errc::width_exceeded, std::to_string(k) + " colors exceed 64");

  std::vector<bool> bridge(static_cast<std::size_t>(m), false);
  for (EdgeIndex e : structure_report(g).bridges) bridge[static_cast<std::size_t>(e)] = true;

  // Cut edges need pairwise distinct colors in every rainbow coloring.
  auto allow = [&](std::span<const int> prefix, int label) {
    const auto pos = prefix.size();
    if (!bridge[pos]) return true;
    for (std::size_t i = 0; i < pos; ++i) {
      if (bridge[i] && prefix[i] == label) return false;
    }
    return true;
  };

  const RainbowChecker checker(g);
  std::optional<EdgeColoring> found;
  auto visit = [&](std::span<const int> labels) {
    if (++examined > budget) throw BudgetExceeded(examined);
    if (!checker.connects(labels)) return false;
    std::vector<int> colors(labels.begin(), labels.end());
    for (int& c : colors) ++c;
    found = EdgeColoring(std::move(colors));
    return true;
  };
  for_each_partition(m, k, allow, visit);
  return found;
}

}  // namespace detail

/// A rainbow coloring with exactly k colors, or nullopt if none exists. The
/// returned coloring is the first feasible partition in lexicographic order.
inline std::optional<EdgeColoring> feasible_k(const Graph& g, int k,
                                              std::uint64_t budget = kDefaultBudget) {
  detail::require_rc_input(g);
  std::uint64_t examined = 0;
  return detail::feasible_k_counted(g, k, budget, examined);
}

/// rc(G) by upward search from lower_bound(G). Feasibility is monotone in k
/// (splitting a color class keeps every rainbow path rainbow), so the first
/// feasible k is the answer. The budget covers the whole search.
inline ExactRc rc_exact(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  const auto lb = lower_bound(g);
  std::uint64_t examined = 0;
  for (int k = lb.value; k <= g.size(); ++k) {
    if (auto c = detail::feasible_k_counted(g, k, budget, examined)) {
      return {k, std::move(*c), "exhaustive search"};
    }
  }
  // Unreachable for connected graphs: all-distinct colors always work.
  throw Error(Errc::construction_failed_verification, "no feasible k up to m");
}

struct BandOutcome {
  bool feasible = false;
  std::optional<EdgeColoring> coloring;
};

/// Exhaustive feasibility for each k with m-6 <= k <= m.
inline std::map<int, BandOutcome> rc_band(const Graph& g, std::span<const int> ks,
                                          std::uint64_t budget = kDefaultBudget) {
  detail::require_rc_input(g);
  const int m = g.size();
  for (int k : ks) {
    if (k < m - 6 || k > m || k < 1) {
      throw Error(Errc::k_out_of_band,
                  "k=" + std::to_string(k) + " outside band for m=" + std::to_string(m));
    }
  }
  std::map<int, BandOutcome> out;
  for (int k : ks) {
    std::uint64_t examined = 0;
    auto c = detail::feasible_k_counted(g, k, budget, examined);
    out[k] = BandOutcome{c.has_value(), std::move(c)};
  }
  return out;
}

}  // namespace rainbow
