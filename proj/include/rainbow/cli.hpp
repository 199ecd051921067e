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

// Batch commands behind the rcgraph tool. Each returns the process exit code.

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "json.hpp"
#include "rainbow/characterize.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/genlab.hpp"
#include "rainbow/io.hpp"

namespace rainbow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDisconnected = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitMismatch = 5;

using nlohmann::json;

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  return read_graph(in);
}

inline EdgeColoring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  return read_coloring(in);
}

namespace detail {

// Malformed files and invalid graphs are both format errors at this boundary.
inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::disconnected:
    case Errc::trivial_graph: return kExitDisconnected;
    case Errc::budget_exceeded: return kExitBudget;
    default: return kExitParse;
  }
}

}  // namespace detail

inline json to_json(const CheckReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"graph", m.graph}, {"predicted", m.predicted}, {"oracle", m.oracle}});
  }
  return {{"graphs_examined", r.graphs_examined},
          {"class_counts", r.class_counts},
          {"mismatches", mismatches},
          {"budget_exhaustions", r.budget_exhaustions},
          {"success", r.success()}};
}

/// JSON form of a classification: {n, m, class, [cycle_length], rc, [certificate]}.
inline json classification_json(const Graph& g, const ClassLabel& label, const RcResult& result,
                                bool with_certificate) {
  json out{{"n", g.order()}, {"m", g.size()}, {"class", label.tag()}};
  if (label.kind == LabelKind::CycleExact) out["cycle_length"] = label.cycle_length;
  if (const auto* e = std::get_if<ExactRc>(&result)) {
    out["rc"] = {{"exact", e->value}, {"reason", e->reason}};
    if (with_certificate) out["certificate"] = e->certificate.colors();
  } else {
    const auto& b = std::get<RcBounds>(result);
    out["rc"] = {{"lower", b.lower},
                 {"upper", b.upper},
                 {"lower_reason", b.lower_reason},
                 {"upper_reason", b.upper_reason}};
  }
  return out;
}

struct ClassifyOptions {
  std::string graph_path;
  bool certificate = false;
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
};

inline int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(opt.graph_path);
    const ClassLabel label = class_label(g);
    const RcResult result = rc_characterize(g, opt.budget);
    if (opt.json) {
      out << classification_json(g, label, result, opt.certificate).dump(2) << '\n';
      return kExitOk;
    }
    out << "n " << g.order() << "\nm " << g.size() << "\nclass " << label.display() << '\n';
    if (const auto* e = std::get_if<ExactRc>(&result)) {
      out << "rc " << e->value << "\nreason " << e->reason << '\n';
      if (opt.certificate) {
        out << "# certificate\n";
        write_coloring(out, e->certificate);
      }
    } else {
      const auto& b = std::get<RcBounds>(result);
      out << "rc bounds " << b.lower << ' ' << b.upper << "\nlower " << b.lower_reason
          << "\nupper " << b.upper_reason << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return detail::exit_code_for(e);
  }
}

inline int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
                      std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(graph_path);
    const EdgeColoring c = load_coloring(coloring_path);
    const auto verdict = is_rainbow_connected(g, c);
    if (verdict) {
      out << "RAINBOW-CONNECTED\n";
      return kExitOk;
    }
    out << "FAIL " << verdict.witness->first << ' ' << verdict.witness->second << '\n';
    return kExitFail;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
}

struct ExactOptions {
  std::string graph_path;
  std::uint64_t budget = kDefaultBudget;
  bool band = false;
};

inline int cmd_exact(const ExactOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(opt.graph_path);
    if (opt.band) {
      std::vector<int> ks;
      for (int k : {g.size() - 2, g.size() - 3, g.size() - 4}) {
        if (k >= 1) ks.push_back(k);
      }
      for (const auto& [k, outcome] : rc_band(g, ks, opt.budget)) {
        out << "k " << k << ' ' << (outcome.feasible ? "feasible" : "infeasible") << '\n';
      }
      return kExitOk;
    }
    const auto rc = rc_exact(g, opt.budget);
    out << "rc " << rc.value << '\n';
    write_coloring(out, rc.certificate);
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return detail::exit_code_for(e);
  }
}

struct CheckOptions {
  int max_n = 7;
  std::uint64_t budget = kDefaultBudget;
};

inline int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const auto report = check_theorems(opt.max_n, opt.budget);
    out << to_json(report).dump(2) << '\n';
    return report.success() ? kExitOk : kExitMismatch;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
}

struct GenOptions {
  std::string type;
  std::uint64_t seed = 1;
  int p2 = 0;
  int p4 = 0;
  int n = 0;
  int girth = 3;
};

inline int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    std::optional<Graph> g;
    if (opt.type == "m-class") {
      g = gen_m_class(opt.p2, opt.p4);
    } else if (opt.type == "unicyclic") {
      g = gen_random_unicyclic(opt.seed, opt.n, opt.girth);
    } else if (opt.type == "cycle") {
      g = gen_cycle(opt.n);
    } else if (opt.type == "tree") {
      g = gen_random_tree(opt.seed, opt.n);
    } else {
      err << "unknown --type '" << opt.type << "' (m-class, unicyclic, cycle, tree)\n";
      return kExitParse;
    }
    write_graph(out, *g);
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace rainbow::cli
