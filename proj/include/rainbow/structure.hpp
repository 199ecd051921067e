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
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <variant>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// A tree hanging off one vertex of a 2-connected core.
struct AttachedTree {
  Vertex root = 0;
  std::vector<EdgeIndex> edges;       // sorted
  std::vector<EdgeIndex> leaf_edges;  // one per non-root leaf, ordered by leaf id

  int leaf_count() const { return static_cast<int>(leaf_edges.size()); }
  /// A rooted tree with at most one non-root leaf is a path starting at the root.
  bool is_path() const { return leaf_edges.size() <= 1; }
};

/// Trees attached at `roots` once the `core` edges are removed. Returns
/// nullopt if the remaining edges do not form one tree per root.
inline std::optional<std::vector<AttachedTree>> attached_trees(const Graph& g,
                                                               std::span<const Vertex> roots,
                                                               std::span<const EdgeIndex> core) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<bool> core_edge(static_cast<std::size_t>(g.size()), false);
  for (EdgeIndex e : core) core_edge[static_cast<std::size_t>(e)] = true;
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < roots.size(); ++i) owner[static_cast<std::size_t>(roots[i])] = static_cast<int>(i);

  std::vector<AttachedTree> trees(roots.size());
  int covered = static_cast<int>(core.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    AttachedTree& tree = trees[i];
    tree.root = roots[i];
    std::vector<EdgeIndex> via(n, -1);
    std::vector<Vertex> leaves;
    std::queue<Vertex> queue;
    queue.push(tree.root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (const auto& inc : g.incident(x)) {
        if (core_edge[static_cast<std::size_t>(inc.edge)] || inc.edge == via[static_cast<std::size_t>(x)]) continue;
        auto& own = owner[static_cast<std::size_t>(inc.to)];
        if (own >= 0) return std::nullopt;  // second route: not a forest
        own = static_cast<int>(i);
        via[static_cast<std::size_t>(inc.to)] = inc.edge;
        tree.edges.push_back(inc.edge);
        if (g.degree(inc.to) == 1) leaves.push_back(inc.to);
        queue.push(inc.to);
      }
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    std::sort(leaves.begin(), leaves.end());
    for (Vertex leaf : leaves) tree.leaf_edges.push_back(via[static_cast<std::size_t>(leaf)]);
    covered += static_cast<int>(tree.edges.size());
  }
  if (covered != g.size()) return std::nullopt;
  return trees;
}

/// The unique cycle v_1..v_s of a unicyclic graph and the trees T(v_i).
///
/// cycle_edges[i] joins cycle[i] and cycle[(i+1) % s]. The traversal starts
/// at the smallest cycle vertex and moves to its smaller cycle neighbour.
struct UnicyclicDecomposition {
  std::vector<Vertex> cycle;
  std::vector<EdgeIndex> cycle_edges;
  std::vector<AttachedTree> trees;
  std::vector<int> leaf_counts;

  int girth() const { return static_cast<int>(cycle.size()); }
};

inline UnicyclicDecomposition unicyclic_decompose(const Graph& g) {
  if (g.size() != g.order() || !is_connected(g)) {
    throw Error(Errc::not_unicyclic, "graph is not connected with cyclomatic number 1");
  }
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  std::queue<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.degree(v) == 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    const Vertex x = leaves.front();
    leaves.pop();
    removed[static_cast<std::size_t>(x)] = true;
    for (const auto& inc : g.incident(x)) {
      if (!removed[static_cast<std::size_t>(inc.to)] && --degree[static_cast<std::size_t>(inc.to)] == 1) {
        leaves.push(inc.to);
      }
    }
  }

  UnicyclicDecomposition d;
  Vertex start = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[static_cast<std::size_t>(v)]) {
      start = v;
      break;
    }
  }
  auto cycle_neighbours = [&](Vertex v) {
    std::vector<Incidence> out;
    for (const auto& inc : g.incident(v)) {
      if (!removed[static_cast<std::size_t>(inc.to)]) out.push_back(inc);
    }
    std::sort(out.begin(), out.end(), [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    return out;
  };

  Vertex prev = -1;
  Vertex cur = start;
  do {
    d.cycle.push_back(cur);
    const auto nbrs = cycle_neighbours(cur);
    const Incidence& step = (prev < 0 || nbrs[0].to != prev) ? nbrs[0] : nbrs[1];
    d.cycle_edges.push_back(step.edge);
    prev = cur;
    cur = step.to;
  } while (cur != start);

  auto trees = attached_trees(g, d.cycle, d.cycle_edges);
  if (!trees) throw Error(Errc::not_unicyclic, "trees do not partition the non-cycle edges");
  d.trees = std::move(*trees);
  for (const auto& t : d.trees) d.leaf_counts.push_back(t.leaf_count());
  return d;
}

// ---------------------------------------------------------------------------
// Block recognition

struct CycleBlock {
  int length = 0;
};

/// K4 minus an edge: v1,v3 are the adjacent degree-3 vertices, v2,v4 the
/// nonadjacent degree-2 vertices (v1 < v3, v2 < v4).
struct K4MinusEBlock {
  Vertex v1 = 0, v2 = 0, v3 = 0, v4 = 0;
};

struct K4Block {};

struct CompleteBlock {
  int size = 0;
};

/// Three internally disjoint paths between two branch vertices, lengths a <= b <= c.
/// Each path is listed from the smaller branch vertex to the larger one.
struct ThetaBlock {
  int a = 0, b = 0, c = 0;
  std::array<std::vector<Vertex>, 3> paths;
};

struct OtherTwoConnected {};

using BlockKind =
    std::variant<CycleBlock, K4MinusEBlock, K4Block, CompleteBlock, ThetaBlock, OtherTwoConnected>;

namespace detail {

inline BlockKind classify_two_connected(const Graph& g, std::span<const EdgeIndex> block) {
  std::map<Vertex, std::vector<Incidence>> local;
  for (EdgeIndex e : block) {
    const Edge& edge = g.edge(e);
    local[edge.u].push_back({edge.v, e});
    local[edge.v].push_back({edge.u, e});
  }
  const int nb = static_cast<int>(local.size());
  const int mb = static_cast<int>(block.size());

  std::vector<Vertex> branch;
  bool all_two = true;
  bool theta_profile = true;
  for (const auto& [v, inc] : local) {
    const auto deg = inc.size();
    if (deg != 2) all_two = false;
    if (deg == 3) branch.push_back(v);
    else if (deg != 2) theta_profile = false;
  }
  if (all_two) return CycleBlock{nb};
  if (2L * mb == static_cast<long>(nb) * (nb - 1)) {
    if (nb == 4) return K4Block{};
    return CompleteBlock{nb};
  }
  if (!theta_profile || branch.size() != 2) return OtherTwoConnected{};

  ThetaBlock theta;
  const Vertex u = branch[0];
  std::vector<std::vector<Vertex>> paths;
  for (const auto& first : local[u]) {
    std::vector<Vertex> path{u};
    Incidence step = first;
    while (true) {
      path.push_back(step.to);
      if (step.to == branch[1]) break;
      const auto& next = local[step.to];
      step = next[0].edge == step.edge ? next[1] : next[0];
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (std::size_t i = 0; i < 3; ++i) theta.paths[i] = std::move(paths[i]);
  theta.a = static_cast<int>(theta.paths[0].size()) - 1;
  theta.b = static_cast<int>(theta.paths[1].size()) - 1;
  theta.c = static_cast<int>(theta.paths[2].size()) - 1;

  if (nb == 4 && theta.a == 1 && theta.b == 2 && theta.c == 2) {
    const Vertex x = theta.paths[1][1];
    const Vertex y = theta.paths[2][1];
    return K4MinusEBlock{branch[0], std::min(x, y), branch[1], std::max(x, y)};
  }
  return theta;
}

}  // namespace detail

/// Shape of a 2-connected block of g. Throws NotABlock if `block` is not
/// exactly the edge set of one of g's 2-connected blocks.
inline BlockKind block_kind(const Graph& g, std::span<const EdgeIndex> block) {
  std::vector<EdgeIndex> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());
  const auto report = structure_report(g);
  const bool found = std::any_of(report.blocks.begin(), report.blocks.end(), [&](const Block& b) {
    return b.two_connected && b.edges == sorted;
  });
  if (!found) throw Error(Errc::not_a_block, "edge set is not a 2-connected block");
  return detail::classify_two_connected(g, sorted);
}

/// The Θ shape of g if the whole graph is a Θ-graph.
inline std::optional<ThetaBlock> theta_shape(const Graph& g) {
  const auto report = structure_report(g);
  if (!report.connected || report.blocks.size() != 1 || !report.blocks[0].two_connected) {
    return std::nullopt;
  }
  // Vertices outside the block would be isolated; a connected graph has none.
  const auto kind = detail::classify_two_connected(g, report.blocks[0].edges);
  if (const auto* t = std::get_if<ThetaBlock>(&kind)) return *t;
  if (const auto* k = std::get_if<K4MinusEBlock>(&kind)) {
    ThetaBlock t;
    t.a = 1;
    t.b = 2;
    t.c = 2;
    t.paths = {std::vector<Vertex>{k->v1, k->v3}, std::vector<Vertex>{k->v1, k->v2, k->v3},
               std::vector<Vertex>{k->v1, k->v4, k->v3}};
    return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subdivision

/// One edge subdivision: `edge` (u,v) with u < v becomes (u, new_vertex) and
/// the appended edge `new_edge` is (new_vertex, v).
struct SubdivisionStep {
  EdgeIndex edge = 0;
  Vertex new_vertex = 0;
  EdgeIndex new_edge = 0;
};

using SubdivisionTrace = std::vector<SubdivisionStep>;

struct Subdivision {
  Graph graph;
  SubdivisionTrace trace;
};

inline Graph subdivide_once(const Graph& g, EdgeIndex edge, SubdivisionStep* step = nullptr) {
  if (edge < 0 || edge >= g.size()) throw Error(Errc::bad_edge, "no edge " + std::to_string(edge));
  auto pairs = g.pairs();
  const Vertex x = g.order();
  const auto [u, v] = pairs[static_cast<std::size_t>(edge)];
  pairs[static_cast<std::size_t>(edge)] = {u, x};
  pairs.emplace_back(x, v);
  if (step != nullptr) *step = {edge, x, g.size()};
  return Graph(g.order() + 1, pairs);
}

/// Subdivides `edge` `times` times into a path; the first piece keeps the
/// index `edge`, the rest are appended in path order.
inline Subdivision subdivide_traced(const Graph& g, EdgeIndex edge, int times) {
  if (edge < 0 || edge >= g.size()) throw Error(Errc::bad_edge, "no edge " + std::to_string(edge));
  if (times < 1) throw Error(Errc::bad_edge, "subdivision count must be at least 1");
  Subdivision out{g, {}};
  EdgeIndex target = edge;
  for (int i = 0; i < times; ++i) {
    SubdivisionStep step;
    out.graph = subdivide_once(out.graph, target, &step);
    out.trace.push_back(step);
    target = step.new_edge;
  }
  return out;
}

inline Graph subdivide(const Graph& g, EdgeIndex edge, int times) {
  return subdivide_traced(g, edge, times).graph;
}

// ---------------------------------------------------------------------------

/// Subgraph induced by an edge set, with vertices renumbered in increasing
/// global id and edges in the given order.
struct EdgeSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;  // local -> global
  std::vector<EdgeIndex> edges;  // local -> global
};

inline EdgeSubgraph edge_subgraph(const Graph& g, std::span<const EdgeIndex> edges) {
  std::vector<Vertex> vertices;
  for (EdgeIndex e : edges) {
    vertices.push_back(g.edge(e).u);
    vertices.push_back(g.edge(e).v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto local = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  std::vector<std::pair<int, int>> pairs;
  for (EdgeIndex e : edges) pairs.emplace_back(local(g.edge(e).u), local(g.edge(e).v));
  const int n = std::max<int>(1, static_cast<int>(vertices.size()));
  return {Graph(n, pairs), vertices, std::vector<EdgeIndex>(edges.begin(), edges.end())};
}

}  // namespace rainbow
