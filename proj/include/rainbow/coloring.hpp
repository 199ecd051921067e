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
#include <map>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Colors are tracked as bits of a 64-bit mask during path search.
inline constexpr int kMaxColors = 64;

/// Edge coloring in canonical surjective form: colors[i] is the 1-based color
/// of edge i and every id in 1..num_colors is used at least once.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  explicit EdgeColoring(std::vector<int> colors) : colors_(std::move(colors)) {
    int top = 0;
    for (int c : colors_) {
      if (c < 1) throw Error(Errc::invalid_coloring, "color ids are 1-based");
      top = std::max(top, c);
    }
    std::vector<bool> used(static_cast<std::size_t>(top) + 1, false);
    for (int c : colors_) used[static_cast<std::size_t>(c)] = true;
    for (int c = 1; c <= top; ++c) {
      if (!used[static_cast<std::size_t>(c)]) {
        throw Error(Errc::invalid_coloring, "color " + std::to_string(c) + " is skipped");
      }
    }
    num_colors_ = top;
  }

  /// Renames arbitrary positive ids onto 1..k preserving their relative order.
  static EdgeColoring compacted(std::span<const int> raw) {
    std::map<int, int> rank;
    for (int c : raw) {
      if (c < 1) throw Error(Errc::invalid_coloring, "color ids are 1-based");
      rank.emplace(c, 0);
    }
    int next = 0;
    for (auto& [id, r] : rank) r = ++next;
    std::vector<int> out;
    out.reserve(raw.size());
    for (int c : raw) out.push_back(rank[c]);
    return EdgeColoring(std::move(out));
  }

  const std::vector<int>& colors() const { return colors_; }
  int num_colors() const { return num_colors_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int operator[](EdgeIndex e) const { return colors_.at(static_cast<std::size_t>(e)); }

  bool operator==(const EdgeColoring&) const = default;

 private:
  std::vector<int> colors_;
  int num_colors_ = 0;
};

struct RainbowVerdict {
  bool connected = false;
  std::optional<std::pair<Vertex, Vertex>> witness;  // first failing pair (u < v)

  explicit operator bool() const { return connected; }
};

/// Reusable rainbow-connectivity test for one graph. Colors passed to the
/// check functions are 0-based class ids below kMaxColors.
class RainbowChecker {
 public:
  explicit RainbowChecker(const Graph& g) : g_(&g), unicyclic_or_tree_(g.size() - g.order() + 1 <= 1) {}

  /// First vertex pair (lexicographic) without a rainbow path, if any.
  std::optional<std::pair<Vertex, Vertex>> first_failure(std::span<const int> colors) const {
    return unicyclic_or_tree_ ? path_search_failure(colors) : state_search_failure(colors);
  }

  bool connects(std::span<const int> colors) const { return !first_failure(colors).has_value(); }

  /// Depth-first search over (vertex, used-color set) states with visited
  /// pruning. Exact for any graph: a rainbow walk contains a rainbow path.
  std::optional<std::pair<Vertex, Vertex>> state_search_failure(std::span<const int> colors) const {
    const Graph& g = *g_;
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::unordered_set<std::uint64_t>> seen(n);
    std::vector<bool> reached(n);
    std::vector<std::pair<Vertex, std::uint64_t>> stack;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (auto& s : seen) s.clear();
      std::fill(reached.begin(), reached.end(), false);
      std::size_t remaining = n - 1;
      reached[static_cast<std::size_t>(u)] = true;
      seen[static_cast<std::size_t>(u)].insert(0);
      stack.assign(1, {u, 0});
      while (!stack.empty() && remaining > 0) {
        const auto [x, mask] = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(x)) {
          const std::uint64_t bit = std::uint64_t{1} << colors[static_cast<std::size_t>(inc.edge)];
          if ((mask & bit) != 0) continue;
          const std::uint64_t next = mask | bit;
          const auto y = static_cast<std::size_t>(inc.to);
          if (!seen[y].insert(next).second) continue;
          if (!reached[y]) {
            reached[y] = true;
            --remaining;
          }
          stack.emplace_back(inc.to, next);
        }
      }
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!reached[static_cast<std::size_t>(v)]) return std::pair{u, v};
      }
    }
    return std::nullopt;
  }

  /// Enumerates simple paths from each source. With cyclomatic number at
  /// most one every pair has at most two simple paths, so this is linear per
  /// source.
  std::optional<std::pair<Vertex, Vertex>> path_search_failure(std::span<const int> colors) const {
    const Graph& g = *g_;
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<bool> on_path(n);
    std::vector<bool> reached(n);
    struct Frame {
      Vertex v;
      std::uint64_t mask;
      std::size_t next;
    };
    std::vector<Frame> stack;
    for (Vertex u = 0; u < g.order(); ++u) {
      std::fill(on_path.begin(), on_path.end(), false);
      std::fill(reached.begin(), reached.end(), false);
      reached[static_cast<std::size_t>(u)] = on_path[static_cast<std::size_t>(u)] = true;
      stack.assign(1, {u, 0, 0});
      while (!stack.empty()) {
        Frame& top = stack.back();
        const auto incidences = g.incident(top.v);
        if (top.next == incidences.size()) {
          on_path[static_cast<std::size_t>(top.v)] = false;
          stack.pop_back();
          continue;
        }
        const Incidence inc = incidences[top.next++];
        const auto y = static_cast<std::size_t>(inc.to);
        const std::uint64_t bit = std::uint64_t{1} << colors[static_cast<std::size_t>(inc.edge)];
        if (on_path[y] || (top.mask & bit) != 0) continue;
        reached[y] = on_path[y] = true;
        stack.push_back({inc.to, top.mask | bit, 0});
      }
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!reached[static_cast<std::size_t>(v)]) return std::pair{u, v};
      }
    }
    return std::nullopt;
  }

 private:
  const Graph* g_;
  bool unicyclic_or_tree_;
};

namespace detail {

inline std::vector<int> zero_based(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.size()) {
    throw Error(Errc::coloring_length_mismatch,
                "coloring has " + std::to_string(c.size()) + " entries for " +
                    std::to_string(g.size()) + " edges");
  }
  if (c.num_colors() > kMaxColors) {
    throw Error(Errc::width_exceeded, std::to_string(c.num_colors()) + " colors exceed 64");
  }
  std::vector<int> out(c.colors());
  for (int& x : out) --x;
  return out;
}

}  // namespace detail

/// True iff every vertex pair is joined by a path with no repeated color;
/// otherwise the first failing pair.
inline RainbowVerdict is_rainbow_connected(const Graph& g, const EdgeColoring& c) {
  const auto colors = detail::zero_based(g, c);
  const auto failure = RainbowChecker(g).first_failure(colors);
  return {!failure.has_value(), failure};
}

}  // namespace rainbow
