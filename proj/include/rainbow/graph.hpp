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
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  Vertex to = 0;
  EdgeIndex edge = 0;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically with u < v but keep the order in which they
/// were supplied: edge i of the input is edge i for the lifetime of the
/// object. Colorings index into this order.
class Graph {
 public:
  Graph() : Graph(1, {}) {}

  Graph(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
    if (n < 1) throw Error(Errc::empty_graph, "a graph needs at least one vertex");
    adjacency_.resize(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> seen;
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw Error(Errc::vertex_out_of_range,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                        std::to_string(n));
      }
      if (a == b) throw Error(Errc::self_loop, "loop at vertex " + std::to_string(a));
      Edge e{std::min(a, b), std::max(a, b)};
      if (!seen.insert({e.u, e.v}).second) {
        throw Error(Errc::duplicate_edge,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") repeated");
      }
      const auto index = static_cast<EdgeIndex>(edges_.size());
      edges_.push_back(e);
      adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, index});
      adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, index});
    }
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(static_cast<std::size_t>(i)); }

  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const {
    for (const auto& inc : incident(a)) {
      if (inc.to == b) return inc.edge;
    }
    return std::nullopt;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  return Graph(n, pairs);
}

/// Compact "n m; u-v u-v ..." rendering used in reports and diagnostics.
inline std::string describe(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + ";";
  for (const auto& e : g.edges()) {
    out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

/// BFS hop counts from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(x)) {
      auto& d = dist[static_cast<std::size_t>(inc.to)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push(inc.to);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

/// Shortest-path edge count between u and v.
inline int distance(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw Error(Errc::vertex_out_of_range, "distance query outside 0..n-1");
  }
  const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) {
    throw Error(Errc::disconnected,
                "no path between " + std::to_string(u) + " and " + std::to_string(v));
  }
  return d;
}

struct Block {
  std::vector<EdgeIndex> edges;  // sorted
  bool two_connected = false;    // false: a single bridge (K2)
};

struct StructureReport {
  bool connected = false;
  std::optional<int> diameter;  // nullopt: infinite (disconnected)
  std::vector<EdgeIndex> bridges;
  std::vector<Block> blocks;
  std::optional<int> girth;  // nullopt: forest
  int cyclomatic = 0;
  bool is_tree = false;
  bool is_cycle = false;
  bool is_complete = false;

  int nontrivial_block_count() const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                          [](const Block& b) { return b.two_connected; }));
  }
};

namespace detail {

// Edge-stack biconnected components (Hopcroft-Tarjan), iterative.
inline std::vector<Block> block_decomposition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Block> blocks;
  std::vector<EdgeIndex> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    EdgeIndex via;
    std::size_t next;
  };

  for (Vertex root = 0; root < g.order(); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto v = static_cast<std::size_t>(top.v);
      const auto incidences = g.incident(top.v);
      if (top.next < incidences.size()) {
        const Incidence inc = incidences[top.next++];
        if (inc.edge == top.via) continue;
        const auto w = static_cast<std::size_t>(inc.to);
        if (disc[w] < 0) {
          edge_stack.push_back(inc.edge);
          disc[w] = low[w] = timer++;
          stack.push_back({inc.to, inc.edge, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(inc.edge);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) break;
      const auto parent = static_cast<std::size_t>(stack.back().v);
      const auto child = static_cast<std::size_t>(done.v);
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        Block block;
        while (true) {
          const EdgeIndex e = edge_stack.back();
          edge_stack.pop_back();
          block.edges.push_back(e);
          if (e == done.via) break;
        }
        std::sort(block.edges.begin(), block.edges.end());
        block.two_connected = block.edges.size() > 1;
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return blocks;
}

inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    std::vector<int> dist(n, -1);
    std::vector<EdgeIndex> via(n, -1);
    std::queue<Vertex> queue;
    dist[static_cast<std::size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      const auto xs = static_cast<std::size_t>(x);
      for (const auto& inc : g.incident(x)) {
        if (inc.edge == via[xs]) continue;
        const auto ys = static_cast<std::size_t>(inc.to);
        if (dist[ys] < 0) {
          dist[ys] = dist[xs] + 1;
          via[ys] = inc.edge;
          queue.push(inc.to);
        } else {
          const int length = dist[xs] + dist[ys] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

}  // namespace detail

inline StructureReport structure_report(const Graph& g) {
  StructureReport r;
  const int n = g.order();
  const int m = g.size();

  int diameter = 0;
  r.connected = true;
  for (Vertex v = 0; v < n && r.connected; ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) {
        r.connected = false;
        break;
      }
      diameter = std::max(diameter, d);
    }
  }
  if (r.connected) r.diameter = diameter;

  r.blocks = detail::block_decomposition(g);
  for (const auto& b : r.blocks) {
    if (!b.two_connected) r.bridges.push_back(b.edges.front());
  }
  std::sort(r.bridges.begin(), r.bridges.end());

  r.girth = detail::girth(g);
  r.cyclomatic = m - n + 1;
  r.is_tree = r.connected && r.cyclomatic == 0;
  bool all_degree_two = n >= 3;
  for (Vertex v = 0; v < n && all_degree_two; ++v) all_degree_two = g.degree(v) == 2;
  r.is_cycle = r.connected && all_degree_two;
  r.is_complete = r.connected && static_cast<long>(m) == static_cast<long>(n) * (n - 1) / 2;
  return r;
}

}  // namespace rainbow
