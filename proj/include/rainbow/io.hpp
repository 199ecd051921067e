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

// Text formats.
//
// Graph file: optional '#' comment lines, a header "n m", then m lines "u v"
// with 0-based vertex ids. Coloring file: one 1-based color id per line,
// line i coloring edge i of the graph file.

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

namespace detail {

// Next non-blank, non-comment line; false at end of input.
inline bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

template <class... T>
bool read_exact(const std::string& line, T&... out) {
  std::istringstream ss(line);
  ((ss >> out), ...);
  if (ss.fail()) return false;
  std::string rest;
  return !(ss >> rest);
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!detail::next_content_line(in, line, line_no)) detail::parse_fail(line_no, "missing header");
  long n = 0;
  long m = 0;
  if (!detail::read_exact(line, n, m) || n < 1 || m < 0) {
    detail::parse_fail(line_no, "header must be \"n m\" with n >= 1, m >= 0");
  }
  std::vector<std::pair<int, int>> pairs;
  for (long i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line, line_no)) {
      detail::parse_fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    int u = 0;
    int v = 0;
    if (!detail::read_exact(line, u, v)) detail::parse_fail(line_no, "edge line must be \"u v\"");
    pairs.emplace_back(u, v);
  }
  if (detail::next_content_line(in, line, line_no)) {
    detail::parse_fail(line_no, "more edge lines than the declared m");
  }
  return Graph(static_cast<int>(n), pairs);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// Reads color ids and compacts them onto 1..k.
inline EdgeColoring read_coloring(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<int> raw;
  while (detail::next_content_line(in, line, line_no)) {
    int c = 0;
    if (!detail::read_exact(line, c) || c < 1) {
      detail::parse_fail(line_no, "expected one positive color id");
    }
    raw.push_back(c);
  }
  return EdgeColoring::compacted(raw);
}

inline void write_coloring(std::ostream& out, const EdgeColoring& c) {
  for (int x : c.colors()) out << x << '\n';
}

}  // namespace rainbow
