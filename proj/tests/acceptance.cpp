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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Failure details go to stderr.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rainbow/rainbow.hpp"

namespace {

using namespace rainbow;

struct Outcome {
  bool pass = true;
  int failures = 0;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string why) {
    pass = false;
    ++failures;
    if (details.size() < 20) details.push_back(std::move(why));
  }
};

// ---------------------------------------------------------------------------
// Corpora

std::vector<Graph> unicyclic_corpus() { return enum_unicyclic(9); }

std::vector<Graph> m_class_corpus() {
  std::vector<Graph> out;
  for (int p2 = 0; p2 <= 3; ++p2)
    for (int p4 = 0; p4 <= 3; ++p4) out.push_back(gen_m_class(p2, p4));
  return out;
}

std::vector<Graph> cycle_corpus() {
  std::vector<Graph> out;
  for (int k = 3; k <= 12; ++k) out.push_back(gen_cycle(k));
  return out;
}

// Every tree with 2..10 vertices (m <= 9), read off rooted level sequences.
std::vector<Graph> tree_corpus() {
  std::vector<Graph> out;
  for (int n = 2; n <= 10; ++n) {
    for (const auto& levels : rooted_trees(n)) {
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 1; i < levels.size(); ++i) {
        std::size_t parent = i - 1;
        while (levels[parent] != levels[i] - 1) --parent;
        pairs.emplace_back(static_cast<int>(parent), static_cast<int>(i));
      }
      out.emplace_back(n, pairs);
    }
  }
  return out;
}

// Girth-4 unicyclic graphs labeled H3 with 10 <= n <= 12, plus those of the
// exhaustive corpus.
std::vector<Graph> h3_corpus(const std::vector<Graph>& unicyclic) {
  std::vector<Graph> out;
  for (const Graph& g : unicyclic)
    if (class_label(g).kind == LabelKind::H3) out.push_back(g);
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    const int n = 10 + static_cast<int>(seed % 3);
    const Graph g = gen_random_unicyclic(seed, n, 4);
    if (class_label(g).kind == LabelKind::H3) out.push_back(g);
  }
  return out;
}

std::vector<Graph> random_corpus() {
  std::vector<Graph> out;
  std::mt19937_64 rng(2026);
  while (out.size() < 150) {
    const int n = std::uniform_int_distribution<int>(4, 9)(rng);
    const int max_m = std::min(12, n * (n - 1) / 2);
    if (max_m < n) continue;
    const int m = std::uniform_int_distribution<int>(n, max_m)(rng);
    out.push_back(gen_random_connected(rng(), n, m));
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) out.push_back(gen_random_theta(seed, 5 + static_cast<int>(seed % 8)));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    out.push_back(gen_random_unicyclic(seed, 10 + static_cast<int>(seed % 3), 3 + static_cast<int>(seed % 7)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criteria

// Band ground truth for every graph of the unicyclic corpus, shared by 1, 2, 4.
std::vector<std::string> truths;

Outcome criterion1(const std::vector<Graph>& unicyclic) {
  Outcome o;
  int members = 0;
  for (std::size_t i = 0; i < unicyclic.size(); ++i) {
    const Graph& g = unicyclic[i];
    const bool predicted = in_m_minus_2_family(g);
    members += predicted;
    if (predicted != (truths[i] == "m-2")) {
      o.fail(describe(g) + " label " + class_label(g).display() + " truth " + truths[i]);
    }
  }
  std::ostringstream s;
  s << unicyclic.size() << " unicyclic graphs n<=9, " << members << " in {C5}+G2+H2, "
    << o.failures << " mismatches";
  o.summary = s.str();
  return o;
}

Outcome criterion2(const std::vector<Graph>& unicyclic, const std::vector<Graph>& m_class) {
  Outcome o;
  int members = 0;
  auto check = [&](const Graph& g, const std::string& truth) {
    const bool predicted = in_m_minus_3_family(g);
    members += predicted;
    if (predicted != (truth == "m-3")) {
      o.fail(describe(g) + " label " + class_label(g).display() + " truth " + truth);
    }
  };
  for (std::size_t i = 0; i < unicyclic.size(); ++i) check(unicyclic[i], truths[i]);
  for (const Graph& g : m_class) check(g, detail::band_truth(g, kDefaultBudget));
  std::ostringstream s;
  s << unicyclic.size() + m_class.size() << " graphs, " << members
    << " in {C7}+G1+H1+J1+L1+M, " << o.failures << " mismatches";
  o.summary = s.str();
  return o;
}

Outcome criterion3(const std::vector<Graph>& trees, const std::vector<Graph>& h3) {
  Outcome o;
  auto expect = [&](const Graph& g, int value, const std::string& what) {
    const auto r = rc_characterize(g);
    const auto* e = std::get_if<ExactRc>(&r);
    const int solved = rc_exact(g).value;
    if (!e || e->value != value || solved != value) {
      o.fail(what + ": expected " + std::to_string(value) + ", solver " + std::to_string(solved) +
             " on " + describe(g));
    }
  };
  expect(gen_cycle(3), 1, "triangle");
  for (int k = 4; k <= 12; ++k) expect(gen_cycle(k), (k + 1) / 2, "C" + std::to_string(k));
  for (const Graph& t : trees) expect(t, t.size(), "tree");
  expect(gen_m_class(0, 0), 2, "K4-e");
  for (const Graph& g : h3) expect(g, g.size() - 4, "H3");
  std::ostringstream s;
  s << "triangle, C4..C12, " << trees.size() << " trees, K4-e, " << h3.size() << " H3 graphs (m<="
    << std::max_element(h3.begin(), h3.end(), [](const Graph& a, const Graph& b) { return a.size() < b.size(); })->size()
    << ")";
  o.summary = s.str();
  return o;
}

Outcome criterion4(const std::vector<const std::vector<Graph>*>& corpora, const std::vector<Graph>& unicyclic) {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t i = 0; i < unicyclic.size(); ++i, ++count) {
    if (truths[i] == "m-1") o.fail(describe(unicyclic[i]));
  }
  for (const auto* corpus : corpora) {
    for (const Graph& g : *corpus) {
      if (g.size() > 12) continue;
      ++count;
      if (rc_exact(g).value == g.size() - 1) o.fail(describe(g));
    }
  }
  o.summary = std::to_string(count) + " graphs with m<=12, " + std::to_string(o.failures) +
              " with rc=m-1";
  return o;
}

Outcome criterion5(const std::vector<const std::vector<Graph>*>& corpora) {
  Outcome o;
  std::size_t exact = 0;
  std::size_t tight = 0;
  for (const auto* corpus : corpora) {
    for (const Graph& g : *corpus) {
      RcResult r;
      try {
        r = rc_characterize(g);
      } catch (const Error& e) {
        o.fail(std::string(e.what()));
        continue;
      }
      const auto* e = std::get_if<ExactRc>(&r);
      if (!e) continue;
      ++exact;
      if (e->certificate.num_colors() != e->value || !is_rainbow_connected(g, e->certificate)) {
        o.fail("certificate " + describe(g));
        continue;
      }
      if (g.size() <= 13 && e->value > 1) {
        ++tight;
        const int k = e->value - 1;
        bool feasible;
        if (k >= g.size() - 6) {
          const std::vector<int> ks{k};
          feasible = rc_band(g, ks).at(k).feasible;
        } else {
          feasible = feasible_k(g, k).has_value();
        }
        if (feasible) o.fail("feasible with " + std::to_string(k) + " colors: " + describe(g));
      }
    }
  }
  o.summary = std::to_string(exact) + " exact results verified, " + std::to_string(tight) +
              " checked one color lower, " + std::to_string(o.failures) + " failures";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int m = 6 + static_cast<int>(seed % 9);
    const Graph g = gen_random_theta(seed * 7919 + 1, m);
    try {
      const auto c = theta_coloring(g);
      if (c.num_colors() != m - 4 || !is_rainbow_connected(g, c)) o.fail("theta " + describe(g));
    } catch (const Error& e) {
      o.fail(std::string(e.what()));
    }
  }
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, std::min(n * (n - 1) / 2, n + 3))(rng);
    const Graph g = gen_random_connected(rng(), n, m);
    const auto base = rc_exact(g).certificate;
    const int e = std::uniform_int_distribution<int>(0, m - 1)(rng);
    const int times = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto s = subdivide_traced(g, e, times);
    try {
      const auto c = extend_subdivision_coloring(g, base, s.graph, s.trace);
      if (c.num_colors() != base.num_colors() + times || !is_rainbow_connected(s.graph, c)) {
        o.fail("subdivision " + describe(s.graph));
      }
    } catch (const Error& err) {
      o.fail(std::string(err.what()));
    }
  }
  o.summary = "50 random theta graphs (6<=m<=14), 50 subdivision extensions, " +
              std::to_string(o.failures) + " failures";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t graphs = 0;
  std::size_t checks = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      ++graphs;
      const RainbowChecker checker(g);
      for (int trial = 0; trial < 200; ++trial) {
        const int k = g.size() == 0 ? 1 : std::uniform_int_distribution<int>(1, g.size())(rng);
        std::vector<int> colors(static_cast<std::size_t>(g.size()));
        for (int& c : colors) c = std::uniform_int_distribution<int>(0, k - 1)(rng);
        const bool truth = oracle::rainbow_connected(g, colors);
        const bool state = !checker.state_search_failure(colors).has_value();
        const bool dispatched = checker.connects(colors);
        ++checks;
        if (state != truth || dispatched != truth) o.fail(describe(g));
      }
    }
  }
  o.summary = std::to_string(graphs) + " connected graphs n<=6, " + std::to_string(checks) +
              " colorings, " + std::to_string(o.failures) + " disagreements with path enumeration";
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const std::function<Outcome()>& run) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %d: %s  %s  (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", o.summary.c_str(), secs);
    for (const auto& d : o.details) std::fprintf(stderr, "  criterion %d: %s\n", id, d.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };

  const auto unicyclic = unicyclic_corpus();
  for (const Graph& g : unicyclic) truths.push_back(detail::band_truth(g, kDefaultBudget));
  const auto m_class = m_class_corpus();
  const auto cycles = cycle_corpus();
  const auto trees = tree_corpus();
  const auto h3 = h3_corpus(unicyclic);
  const auto randoms = random_corpus();

  report(1, [&] { return criterion1(unicyclic); });
  report(2, [&] { return criterion2(unicyclic, m_class); });
  report(3, [&] { return criterion3(trees, h3); });
  report(4, [&] { return criterion4({&m_class, &cycles, &trees, &h3, &randoms}, unicyclic); });
  report(5, [&] { return criterion5({&unicyclic, &m_class, &cycles, &trees, &h3, &randoms}); });
  report(6, [] { return criterion6(); });
  report(7, [] { return criterion7(); });
  return all ? 0 : 1;
}
