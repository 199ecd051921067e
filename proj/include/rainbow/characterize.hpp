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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Labels

enum class LabelKind {
  Tree,
  CompleteGraph,
  CycleExact,
  G1,
  G2,
  H1,
  H2,
  H3,
  J1,
  J2,
  L1,
  L2,
  Girth7Cycle,
  Girth7Other,
  GirthGe8Unicyclic,
  MClass,
  Theta5,
  ThetaLarge,
  K4Block,
  K4eNonM,
  MultiBlock,
  OtherBlock,
};

inline constexpr std::array<LabelKind, 22> kAllLabels = {
    LabelKind::Tree,        LabelKind::CompleteGraph, LabelKind::CycleExact,
    LabelKind::G1,          LabelKind::G2,            LabelKind::H1,
    LabelKind::H2,          LabelKind::H3,            LabelKind::J1,
    LabelKind::J2,          LabelKind::L1,            LabelKind::L2,
    LabelKind::Girth7Cycle, LabelKind::Girth7Other,   LabelKind::GirthGe8Unicyclic,
    LabelKind::MClass,      LabelKind::Theta5,        LabelKind::ThetaLarge,
    LabelKind::K4Block,     LabelKind::K4eNonM,       LabelKind::MultiBlock,
    LabelKind::OtherBlock,
};

constexpr std::string_view label_tag(LabelKind kind) {
  switch (kind) {
    case LabelKind::Tree: return "Tree";
    case LabelKind::CompleteGraph: return "CompleteGraph";
    case LabelKind::CycleExact: return "CycleExact";
    case LabelKind::G1: return "G1";
    case LabelKind::G2: return "G2";
    case LabelKind::H1: return "H1";
    case LabelKind::H2: return "H2";
    case LabelKind::H3: return "H3";
    case LabelKind::J1: return "J1";
    case LabelKind::J2: return "J2";
    case LabelKind::L1: return "L1";
    case LabelKind::L2: return "L2";
    case LabelKind::Girth7Cycle: return "Girth7Cycle";
    case LabelKind::Girth7Other: return "Girth7Other";
    case LabelKind::GirthGe8Unicyclic: return "GirthGe8Unicyclic";
    case LabelKind::MClass: return "MClass";
    case LabelKind::Theta5: return "Theta5";
    case LabelKind::ThetaLarge: return "ThetaLarge";
    case LabelKind::K4Block: return "K4Block";
    case LabelKind::K4eNonM: return "K4eNonM";
    case LabelKind::MultiBlock: return "MultiBlock";
    case LabelKind::OtherBlock: return "OtherBlock";
  }
  return "?";
}

struct ClassLabel {
  LabelKind kind = LabelKind::Tree;
  int cycle_length = 0;  // CycleExact only

  std::string tag() const { return std::string(label_tag(kind)); }
  std::string display() const {
    if (kind == LabelKind::CycleExact) return tag() + "(" + std::to_string(cycle_length) + ")";
    return tag();
  }
  bool operator==(const ClassLabel&) const = default;
};

// ---------------------------------------------------------------------------
// Leaf-count patterns over the dihedral group of the cycle

/// One of the 2s ways to read a cycle of length s: oriented position j is
/// canonical position start + step*j (mod s).
struct Orientation {
  int start = 0;
  int step = 1;
  int size = 0;

  int vertex(int j) const { return (((start + step * j) % size) + size) % size; }
  /// Canonical cycle-edge index of the oriented edge v_j v_{j+1}.
  int edge(int j) const { return step > 0 ? vertex(j) : vertex(j + 1); }
};

template <class Pred>
std::optional<Orientation> find_orientation(std::span<const int> leaves, Pred pred) {
  const int s = static_cast<int>(leaves.size());
  for (int step : {1, -1}) {
    for (int start = 0; start < s; ++start) {
      const Orientation o{start, step, s};
      auto at = [&](int j) { return leaves[static_cast<std::size_t>(o.vertex(j))]; };
      if (pred(at)) return o;
    }
  }
  return std::nullopt;
}

namespace patterns {

inline bool g1(std::span<const int> l) {
  const bool all_positive = std::all_of(l.begin(), l.end(), [](int x) { return x >= 1; });
  const bool some_three = std::any_of(l.begin(), l.end(), [](int x) { return x >= 3; });
  return all_positive || some_three;
}

inline bool h2(std::span<const int> l) {
  return find_orientation(l, [](auto at) {
           return at(0) == 0 && at(2) == 0 && at(1) <= 1 && at(3) <= 1;
         }).has_value();
}

inline bool h3(std::span<const int> l) {
  if (std::any_of(l.begin(), l.end(), [](int x) { return x >= 4; })) return true;
  return find_orientation(l, [](auto at) { return at(0) >= 1 && at(1) >= 2 && at(2) >= 1; })
      .has_value();
}

inline bool j1_pattern_a(std::span<const int> l) {
  return find_orientation(l, [](auto at) {
           return at(0) <= 2 && at(2) <= 1 && at(1) == 0 && at(3) == 0 && at(4) == 0;
         }).has_value();
}

inline bool j1_pattern_b(std::span<const int> l) {
  return find_orientation(l, [](auto at) {
           return at(0) <= 1 && at(1) <= 1 && at(2) <= 1 && at(3) == 0 && at(4) == 0;
         }).has_value();
}

/// Girth-5 class membership; the bare cycle is excluded by the caller.
inline bool j1(std::span<const int> l) { return j1_pattern_a(l) || j1_pattern_b(l); }

/// Girth-5 profiles with a known (m-4)-coloring: some l >= 3, a vertex with
/// l = 2 next to a vertex with a pendant, or every l <= 1. The remaining J2
/// profile, two non-adjacent vertices with l = 2 and nothing else, has
/// rc = m-3 on every instance with n <= 11.
inline bool j2_m_minus_4_construction(std::span<const int> l) {
  if (std::any_of(l.begin(), l.end(), [](int x) { return x >= 3; })) return true;
  if (std::all_of(l.begin(), l.end(), [](int x) { return x <= 1; })) return true;
  return find_orientation(l, [](auto at) { return at(0) == 2 && at(1) >= 1; }).has_value();
}

inline bool l1(std::span<const int> l) {
  return find_orientation(l, [](auto at) {
           return at(0) <= 1 && at(3) <= 1 && at(1) == 0 && at(2) == 0 && at(4) == 0 &&
                  at(5) == 0;
         }).has_value();
}

}  // namespace patterns

// ---------------------------------------------------------------------------
// Classification

namespace detail {

struct MShape {
  K4MinusEBlock block;
  std::vector<AttachedTree> trees;  // at v1, v2, v3, v4
};

inline std::optional<MShape> k4e_shape(const Graph& g, const Block& block) {
  const auto kind = classify_two_connected(g, block.edges);
  const auto* k = std::get_if<K4MinusEBlock>(&kind);
  if (k == nullptr) return std::nullopt;
  const std::array<Vertex, 4> roots{k->v1, k->v2, k->v3, k->v4};
  auto trees = attached_trees(g, roots, block.edges);
  if (!trees) return std::nullopt;
  return MShape{*k, std::move(*trees)};
}

inline bool is_m_shape(const MShape& s) {
  return s.trees[0].edges.empty() && s.trees[2].edges.empty() && s.trees[1].is_path() &&
         s.trees[3].is_path();
}

inline const Block& sole_nontrivial_block(const StructureReport& r) {
  return *std::find_if(r.blocks.begin(), r.blocks.end(),
                       [](const Block& b) { return b.two_connected; });
}

}  // namespace detail

/// Decision procedure over the characterized families; first match wins.
inline ClassLabel class_label(const Graph& g) {
  detail::require_rc_input(g);
  const auto report = structure_report(g);
  if (report.is_tree) return {LabelKind::Tree};
  if (report.is_complete) return {LabelKind::CompleteGraph};
  if (report.is_cycle) return {LabelKind::CycleExact, g.order()};
  if (report.nontrivial_block_count() >= 2) return {LabelKind::MultiBlock};

  if (report.cyclomatic == 1) {
    const auto d = unicyclic_decompose(g);
    const std::span<const int> l = d.leaf_counts;
    switch (d.girth()) {
      case 3: return {patterns::g1(l) ? LabelKind::G1 : LabelKind::G2};
      case 4:
        if (patterns::h2(l)) return {LabelKind::H2};
        if (patterns::h3(l)) return {LabelKind::H3};
        return {LabelKind::H1};
      case 5: return {patterns::j1(l) ? LabelKind::J1 : LabelKind::J2};
      case 6: return {patterns::l1(l) ? LabelKind::L1 : LabelKind::L2};
      case 7: return {LabelKind::Girth7Other};
      default: return {LabelKind::GirthGe8Unicyclic};
    }
  }

  const Block& block = detail::sole_nontrivial_block(report);
  if (const auto shape = detail::k4e_shape(g, block)) {
    return {detail::is_m_shape(*shape) ? LabelKind::MClass : LabelKind::K4eNonM};
  }
  const auto kind = detail::classify_two_connected(g, block.edges);
  if (std::holds_alternative<K4Block>(kind)) return {LabelKind::K4Block};
  if (theta_shape(g)) return {g.size() == 5 ? LabelKind::Theta5 : LabelKind::ThetaLarge};
  return {LabelKind::OtherBlock};
}

/// Membership in the family whose rainbow connection number is m-2:
/// the 5-cycle and the unicyclic classes G2 (girth 3) and H2 (girth 4).
inline bool in_m_minus_2_family(const Graph& g) {
  if (g.order() < 2 || g.size() != g.order() || !is_connected(g)) return false;
  const auto d = unicyclic_decompose(g);
  const std::span<const int> l = d.leaf_counts;
  switch (d.girth()) {
    case 3: return !patterns::g1(l);
    case 4: return patterns::h2(l);
    case 5: return g.size() == 5;
    default: return false;
  }
}

/// Membership in the family whose rainbow connection number is m-3:
/// the 7-cycle, G1, H1, J1, L1 and K4-e with a path at each degree-2 vertex.
inline bool in_m_minus_3_family(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  const auto report = structure_report(g);
  if (report.cyclomatic == 1) {
    const auto d = unicyclic_decompose(g);
    const std::span<const int> l = d.leaf_counts;
    switch (d.girth()) {
      case 3: return patterns::g1(l);
      case 4: return !patterns::h2(l) && !patterns::h3(l);
      case 5: return g.size() != 5 && patterns::j1(l);
      case 6: return patterns::l1(l);
      case 7: return g.size() == 7;
      default: return false;
    }
  }
  if (report.nontrivial_block_count() != 1) return false;
  const auto shape = detail::k4e_shape(g, detail::sole_nontrivial_block(report));
  return shape && detail::is_m_shape(*shape);
}

// ---------------------------------------------------------------------------
// Coloring composition and subdivision

struct ColoredPart {
  std::vector<EdgeIndex> edges;
  EdgeColoring coloring;  // indexed by position in `edges`
};

/// Colors each part with its own palette, offset so palettes are disjoint.
/// The union of rainbow-connected connected parts is rainbow connected.
inline EdgeColoring compose_partition_coloring(const Graph& g, std::span<const ColoredPart> parts) {
  std::vector<int> colors(static_cast<std::size_t>(g.size()), 0);
  int offset = 0;
  for (const auto& part : parts) {
    for (EdgeIndex e : part.edges) {
      if (e < 0 || e >= g.size() || colors[static_cast<std::size_t>(e)] != 0) {
        throw Error(Errc::not_a_partition, "edge " + std::to_string(e) + " misplaced");
      }
      colors[static_cast<std::size_t>(e)] = -1;
    }
    if (part.edges.empty()) throw Error(Errc::part_not_connected, "empty part");
    const auto sub = edge_subgraph(g, part.edges);
    if (!is_connected(sub.graph)) throw Error(Errc::part_not_connected, "part is disconnected");
    if (part.coloring.size() != static_cast<int>(part.edges.size()) ||
        !is_rainbow_connected(sub.graph, part.coloring)) {
      throw Error(Errc::sub_coloring_invalid, "part coloring does not rainbow-connect its part");
    }
    for (std::size_t i = 0; i < part.edges.size(); ++i) {
      colors[static_cast<std::size_t>(part.edges[i])] = offset + part.coloring.colors()[i];
    }
    offset += part.coloring.num_colors();
  }
  if (std::any_of(colors.begin(), colors.end(), [](int c) { return c == 0; })) {
    throw Error(Errc::not_a_partition, "parts do not cover every edge");
  }
  EdgeColoring out(std::move(colors));
  if (!is_rainbow_connected(g, out)) {
    throw Error(Errc::construction_failed_verification, "composed coloring is not rainbow");
  }
  return out;
}

/// Carries a rainbow coloring of g over to a subdivision h: at each step the
/// piece keeping the old edge index inherits its color and the appended
/// piece gets a fresh color.
inline EdgeColoring extend_subdivision_coloring(const Graph& g, const EdgeColoring& c,
                                                const Graph& h, const SubdivisionTrace& trace) {
  if (c.size() != g.size() || !is_rainbow_connected(g, c)) {
    throw Error(Errc::sub_coloring_invalid, "base coloring does not rainbow-connect the graph");
  }
  Graph current = g;
  std::vector<int> colors = c.colors();
  int fresh = c.num_colors();
  for (const auto& step : trace) {
    if (step.edge < 0 || step.edge >= current.size() || step.new_vertex != current.order() ||
        step.new_edge != current.size()) {
      throw Error(Errc::bad_trace, "step does not match the graph being subdivided");
    }
    current = subdivide_once(current, step.edge);
    colors.push_back(++fresh);
  }
  if (!(current == h)) throw Error(Errc::bad_trace, "trace does not reproduce the target graph");
  EdgeColoring out(std::move(colors));
  if (!is_rainbow_connected(h, out)) {
    throw Error(Errc::construction_failed_verification, "extended coloring is not rainbow");
  }
  return out;
}

namespace detail {

inline EdgeColoring verified(const Graph& g, std::vector<int> colors, int expected,
                             std::string_view what) {
  EdgeColoring c(std::move(colors));
  const auto verdict = is_rainbow_connected(g, c);
  if (!verdict || c.num_colors() != expected) {
    std::string msg = std::string(what) + " coloring ";
    if (!verdict) {
      msg += "fails at pair (" + std::to_string(verdict.witness->first) + "," +
             std::to_string(verdict.witness->second) + ")";
    } else {
      msg += "uses " + std::to_string(c.num_colors()) + " colors, expected " +
             std::to_string(expected);
    }
    throw Error(Errc::construction_failed_verification, msg + " on " + describe(g));
  }
  return c;
}

}  // namespace detail

/// Θ-graph coloring: 2 colors when m = 5, otherwise m-4 colors obtained by
/// subdividing Θ(1,2,3) or Θ(2,2,2) and extending their 2-colorings.
inline EdgeColoring theta_coloring(const Graph& g) {
  const auto shape = theta_shape(g);
  if (!shape) throw Error(Errc::not_theta, "graph is not a theta graph");
  const int m = g.size();

  std::array<std::vector<int>, 3> path_colors;
  if (m == 5) {
    path_colors = {std::vector<int>{1}, {1, 2}, {2, 1}};
  } else {
    const bool short_first = shape->a == 1;
    const std::array<int, 3> base_len = short_first ? std::array{1, 2, 3} : std::array{2, 2, 2};
    const std::array<std::vector<int>, 3> base_colors =
        short_first ? std::array<std::vector<int>, 3>{std::vector<int>{1}, {1, 1}, {2, 1, 2}}
                    : std::array<std::vector<int>, 3>{std::vector<int>{1, 2}, {2, 1}, {2, 2}};

    // Base graph: branch vertices 0 and 1, internal vertices appended per path.
    std::vector<std::pair<int, int>> pairs;
    std::array<EdgeIndex, 3> first_edge{};
    std::array<EdgeIndex, 3> last_edge{};
    std::vector<int> base;
    int next_vertex = 2;
    for (std::size_t p = 0; p < 3; ++p) {
      int prev = 0;
      for (int i = 0; i < base_len[p]; ++i) {
        const int to = (i + 1 == base_len[p]) ? 1 : next_vertex++;
        if (i == 0) first_edge[p] = static_cast<EdgeIndex>(pairs.size());
        last_edge[p] = static_cast<EdgeIndex>(pairs.size());
        pairs.emplace_back(prev, to);
        base.push_back(base_colors[p][static_cast<std::size_t>(i)]);
        prev = to;
      }
    }
    Graph h(next_vertex, pairs);
    EdgeColoring hc(base);
    const std::array<int, 3> target{shape->a, shape->b, shape->c};
    for (std::size_t p = 0; p < 3; ++p) {
      const int extra = target[p] - base_len[p];
      if (extra <= 0) continue;
      auto sub = subdivide_traced(h, last_edge[p], extra);
      hc = extend_subdivision_coloring(h, hc, sub.graph, sub.trace);
      h = std::move(sub.graph);
    }
    // Read each path of h from branch vertex 0 to branch vertex 1.
    for (std::size_t p = 0; p < 3; ++p) {
      EdgeIndex e = first_edge[p];
      Vertex at = h.edge(e).other(0);
      path_colors[p].push_back(hc[e]);
      while (at != 1) {
        const auto inc = h.incident(at);
        const Incidence& out = inc[0].edge == e ? inc[1] : inc[0];
        e = out.edge;
        at = out.to;
        path_colors[p].push_back(hc[e]);
      }
    }
  }

  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  for (std::size_t p = 0; p < 3; ++p) {
    const auto& path = shape->paths[p];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      colors[static_cast<std::size_t>(*g.find_edge(path[i], path[i + 1]))] = path_colors[p][i];
    }
  }
  return detail::verified(g, std::move(colors), m == 5 ? 2 : m - 4, "theta");
}

// ---------------------------------------------------------------------------
// Certificates

namespace detail {

/// A designated pendant edge in T(v_position) carrying `color`.
struct Designation {
  int position = 0;
  int color = 0;
};

// Tree edges receive distinct colors from 1..t with the designated pendant
// edges carrying their designated colors; cycle edge j (oriented v_j
// v_{j+1}) receives cycle_colors[j].
inline std::vector<int> unicyclic_scaffold(const Graph& g, const UnicyclicDecomposition& d,
                                           const Orientation& o,
                                           std::span<const Designation> pendants,
                                           std::span<const int> cycle_colors) {
  std::vector<int> colors(static_cast<std::size_t>(g.size()), 0);
  std::vector<bool> taken(static_cast<std::size_t>(g.size()) + 2, false);
  std::vector<std::size_t> used_leaves(d.trees.size(), 0);
  for (const auto& p : pendants) {
    const auto& tree = d.trees[static_cast<std::size_t>(o.vertex(p.position))];
    auto& next = used_leaves[static_cast<std::size_t>(o.vertex(p.position))];
    colors[static_cast<std::size_t>(tree.leaf_edges.at(next++))] = p.color;
    taken[static_cast<std::size_t>(p.color)] = true;
  }
  int fresh = 1;
  for (const auto& tree : d.trees) {
    for (EdgeIndex e : tree.edges) {
      if (colors[static_cast<std::size_t>(e)] != 0) continue;
      while (taken[static_cast<std::size_t>(fresh)]) ++fresh;
      colors[static_cast<std::size_t>(e)] = fresh;
      taken[static_cast<std::size_t>(fresh)] = true;
    }
  }
  for (int j = 0; j < d.girth(); ++j) {
    colors[static_cast<std::size_t>(d.cycle_edges[static_cast<std::size_t>(o.edge(j))])] =
        cycle_colors[static_cast<std::size_t>(j)];
  }
  return colors;
}

inline std::optional<int> exact_value(const ClassLabel& label, int m) {
  switch (label.kind) {
    case LabelKind::Tree: return m;
    case LabelKind::CompleteGraph: return 1;
    case LabelKind::CycleExact:
      return label.cycle_length == 3 ? 1 : (label.cycle_length + 1) / 2;
    case LabelKind::G2:
    case LabelKind::H2: return m - 2;
    case LabelKind::G1:
    case LabelKind::H1:
    case LabelKind::J1:
    case LabelKind::L1:
    case LabelKind::Girth7Cycle:
    case LabelKind::MClass:
    case LabelKind::Theta5: return m - 3;
    case LabelKind::H3: return m - 4;
    default: return std::nullopt;
  }
}

inline std::vector<int> unicyclic_certificate(const Graph& g, LabelKind kind) {
  const auto d = unicyclic_decompose(g);
  const std::span<const int> l = d.leaf_counts;
  const int m = g.size();
  const int s = d.girth();
  const int t = m - s;
  const Orientation identity{0, 1, s};
  auto start_at = [&](auto pred) {
    for (int i = 0; i < s; ++i) {
      if (pred(l[static_cast<std::size_t>(i)])) return Orientation{i, 1, s};
    }
    throw Error(Errc::construction_failed_verification, "no cycle vertex matches the case");
  };
  auto oriented = [&](auto pred) {
    const auto o = find_orientation(l, pred);
    if (!o) throw Error(Errc::construction_failed_verification, "no orientation matches the case");
    return *o;
  };
  using D = Designation;

  switch (kind) {
    case LabelKind::CycleExact: {
      std::vector<int> cycle;
      if (s == 3) {
        cycle = {1, 1, 1};
      } else {
        for (int i = 1; i <= (s + 1) / 2; ++i) cycle.push_back(i);
        for (int i = 1; i <= s / 2; ++i) cycle.push_back(i);
      }
      return unicyclic_scaffold(g, d, identity, {}, cycle);
    }
    case LabelKind::G1: {
      if (std::all_of(l.begin(), l.end(), [](int x) { return x >= 1; })) {
        const std::array<D, 3> p{D{0, 1}, D{1, 2}, D{2, 3}};
        return unicyclic_scaffold(g, d, identity, p, std::array{3, 1, 2});
      }
      const auto o = start_at([](int x) { return x >= 3; });
      const std::array<D, 3> p{D{0, 1}, D{0, 2}, D{0, 3}};
      return unicyclic_scaffold(g, d, o, p, std::array{1, 2, 3});
    }
    case LabelKind::G2: return unicyclic_scaffold(g, d, identity, {}, std::array{t + 1, t + 1, t + 1});
    case LabelKind::H2:
      return unicyclic_scaffold(g, d, identity, {}, std::array{t + 1, t + 2, t + 1, t + 2});
    case LabelKind::H3: {
      if (std::any_of(l.begin(), l.end(), [](int x) { return x >= 4; })) {
        const auto o = start_at([](int x) { return x >= 4; });
        const std::array<D, 4> p{D{0, 1}, D{0, 2}, D{0, 3}, D{0, 4}};
        return unicyclic_scaffold(g, d, o, p, std::array{1, 2, 3, 4});
      }
      const auto o = oriented([](auto at) { return at(0) >= 1 && at(1) >= 2 && at(2) >= 1; });
      const std::array<D, 4> p{D{0, 1}, D{1, 2}, D{1, 3}, D{2, 4}};
      return unicyclic_scaffold(g, d, o, p, std::array{4, 1, 3, 2});
    }
    case LabelKind::H1: {
      if (std::any_of(l.begin(), l.end(), [](int x) { return x >= 2; })) {
        const auto o = start_at([](int x) { return x >= 2; });
        const std::array<D, 2> p{D{0, 1}, D{0, 2}};
        return unicyclic_scaffold(g, d, o, p, std::array{m - 3, 1, 2, m - 3});
      }
      if (const auto o = find_orientation(
              l, [](auto at) { return at(0) == 1 && at(1) == 1 && at(2) == 1; })) {
        const std::array<D, 3> p{D{0, 1}, D{1, 2}, D{2, 3}};
        return unicyclic_scaffold(g, d, *o, p, std::array{3, 1, m - 3, 2});
      }
      // Two adjacent pendant paths and nothing else: the three-pendant
      // coloring with the missing third pendant color replaced by m-3.
      const auto o = oriented([](auto at) { return at(0) == 1 && at(1) == 1; });
      const std::array<D, 2> p{D{0, 1}, D{1, 2}};
      return unicyclic_scaffold(g, d, o, p, std::array{m - 3, 1, m - 3, 2});
    }
    case LabelKind::J1: {
      const auto o = start_at([](int x) { return x >= 1; });
      const std::array<D, 1> p{D{0, 1}};
      return unicyclic_scaffold(g, d, o, p, std::array{m - 4, m - 3, 1, m - 4, m - 3});
    }
    case LabelKind::L1:
      return unicyclic_scaffold(g, d, identity, {},
                                std::array{m - 5, m - 4, m - 3, m - 5, m - 4, m - 3});
    default:
      throw Error(Errc::not_exact_class, "no unicyclic certificate for " +
                                             std::string(label_tag(kind)));
  }
}

inline std::vector<int> m_class_certificate(const Graph& g) {
  const auto report = structure_report(g);
  const auto shape = k4e_shape(g, sole_nontrivial_block(report));
  const int m = g.size();
  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  int next = 1;
  for (std::size_t i : {std::size_t{1}, std::size_t{3}}) {
    for (EdgeIndex e : shape->trees[i].edges) colors[static_cast<std::size_t>(e)] = next++;
  }
  const auto& k = shape->block;
  auto set = [&](Vertex a, Vertex b, int c) { colors[static_cast<std::size_t>(*g.find_edge(a, b))] = c; };
  set(k.v1, k.v2, m - 4);
  set(k.v3, k.v4, m - 4);
  set(k.v1, k.v3, m - 4);
  set(k.v2, k.v3, m - 3);
  set(k.v1, k.v4, m - 3);
  return colors;
}

}  // namespace detail

/// The proof coloring for an exactly-characterized class, re-verified.
inline EdgeColoring certificate(const Graph& g, const ClassLabel& label) {
  if (!(class_label(g) == label)) {
    throw Error(Errc::label_mismatch, label.display() + " is not the class of " + describe(g));
  }
  const int m = g.size();
  const auto expected = detail::exact_value(label, m);
  if (!expected) throw Error(Errc::not_exact_class, label.tag() + " carries bounds only");

  std::vector<int> colors;
  switch (label.kind) {
    case LabelKind::Tree:
      for (int i = 1; i <= m; ++i) colors.push_back(i);
      break;
    case LabelKind::CompleteGraph: colors.assign(static_cast<std::size_t>(m), 1); break;
    case LabelKind::MClass: colors = detail::m_class_certificate(g); break;
    case LabelKind::Theta5: return theta_coloring(g);
    default: colors = detail::unicyclic_certificate(g, label.kind); break;
  }
  return detail::verified(g, std::move(colors), *expected, label.tag());
}

/// rc(G) for the characterized families, bounds elsewhere. Bounds whose ends
/// meet collapse to an exact value with a searched certificate.
inline RcResult rc_characterize(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  const ClassLabel label = class_label(g);
  const int m = g.size();
  if (const auto value = detail::exact_value(label, m)) {
    return ExactRc{*value, certificate(g, label), label.display() + " characterization"};
  }

  const auto lb = lower_bound(g);
  RcBounds bounds{lb.value, m - 4, lb.reason, "not in the m-2 or m-3 families: m-4"};
  if (label.kind == LabelKind::GirthGe8Unicyclic) {
    const int girth = *structure_report(g).girth;
    bounds.upper = m - girth / 2;
    bounds.upper_reason = "cycle of length " + std::to_string(girth) + ": m-floor(g/2)";
  } else if (label.kind == LabelKind::K4Block) {
    bounds.upper = m - 5;
    bounds.upper_reason = "K4 block in one color: m-5";
  } else if (label.kind == LabelKind::J2 &&
             !patterns::j2_m_minus_4_construction(unicyclic_decompose(g).leaf_counts)) {
    bounds.upper = m - 2;
    bounds.upper_reason = "J2 profile without an (m-4)-coloring: cycle bound m-2";
  } else if (label.kind == LabelKind::MultiBlock) {
    bounds.upper_reason = "two edge-disjoint 2-connected subgraphs: m-4";
  }
  if (bounds.lower > bounds.upper) {
    throw Error(Errc::construction_failed_verification,
                "lower bound exceeds upper bound on " + describe(g));
  }
  if (bounds.lower == bounds.upper) {
    auto c = feasible_k(g, bounds.upper, budget);
    if (!c) {
      throw Error(Errc::construction_failed_verification,
                  "no coloring with the upper-bound count on " + describe(g));
    }
    return ExactRc{bounds.upper, std::move(*c), "bounds meet (" + bounds.lower_reason + ")"};
  }
  return bounds;
}

}  // namespace rainbow
