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


// rcgraph: classify graphs by rainbow connection number, verify colorings,
// run the exact solver, and drive the corpus checks.

#include <iostream>

#include "CLI11.hpp"
#include "rainbow/cli.hpp"

int main(int argc, char** argv) {
  namespace rc = rainbow::cli;
  CLI::App app{"rainbow connection number toolkit"};
  app.require_subcommand(1);

  rc::ClassifyOptions classify;
  auto* c = app.add_subcommand("classify", "Label a graph and report rc with an optional certificate");
  c->add_option("graph", classify.graph_path, "graph file")->required();
  c->add_flag("--certificate", classify.certificate, "emit the certificate coloring");
  c->add_flag("--json", classify.json, "JSON output");
  c->add_option("--budget", classify.budget, "partition budget for fallback search");

  std::string verify_graph;
  std::string verify_coloring;
  auto* v = app.add_subcommand("verify", "Check that a coloring is rainbow connected");
  v->add_option("graph", verify_graph, "graph file")->required();
  v->add_option("coloring", verify_coloring, "coloring file")->required();

  rc::ExactOptions exact;
  auto* e = app.add_subcommand("exact", "Compute rc by exhaustive search");
  e->add_option("graph", exact.graph_path, "graph file")->required();
  e->add_option("--budget", exact.budget, "maximum partitions examined");
  e->add_flag("--band", exact.band, "only decide k in {m-2, m-3, m-4}");

  rc::CheckOptions check;
  auto* k = app.add_subcommand("check", "Cross-check the classifier against the exact solver");
  k->add_option("--max-n", check.max_n, "largest unicyclic order enumerated")->check(CLI::Range(3, 12));
  k->add_option("--budget", check.budget, "partition budget per search");

  rc::GenOptions gen;
  auto* g = app.add_subcommand("gen", "Write a generated graph file");
  g->add_option("--type", gen.type, "m-class | unicyclic | cycle | tree")->required();
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--p2", gen.p2, "m-class path length at v2");
  g->add_option("--p4", gen.p4, "m-class path length at v4");
  g->add_option("--n", gen.n, "order (cycle length for --type cycle)");
  g->add_option("--girth", gen.girth, "cycle length for --type unicyclic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : rc::kExitParse;
  }

  if (*c) return rc::cmd_classify(classify, std::cout, std::cerr);
  if (*v) return rc::cmd_verify(verify_graph, verify_coloring, std::cout, std::cerr);
  if (*e) return rc::cmd_exact(exact, std::cout, std::cerr);
  if (*k) return rc::cmd_check(check, std::cout, std::cerr);
  return rc::cmd_gen(gen, std::cout, std::cerr);
}
