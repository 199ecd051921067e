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
#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class Errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  empty_graph,
  disconnected,
  trivial_graph,
  not_unicyclic,
  not_a_block,
  bad_edge,
  invalid_coloring,
  coloring_length_mismatch,
  width_exceeded,
  budget_exceeded,
  k_out_of_band,
  label_mismatch,
  not_exact_class,
  construction_failed_verification,
  not_a_partition,
  part_not_connected,
  sub_coloring_invalid,
  bad_trace,
  not_theta,
  too_large,
  infeasible_params,
  parse_error,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::disconnected: return "Disconnected";
    case Errc::trivial_graph: return "TrivialGraph";
    case Errc::not_unicyclic: return "NotUnicyclic";
    case Errc::not_a_block: return "NotABlock";
    case Errc::bad_edge: return "BadEdge";
    case Errc::invalid_coloring: return "InvalidColoring";
    case Errc::coloring_length_mismatch: return "ColoringLengthMismatch";
    case Errc::width_exceeded: return "WidthExceeded";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::k_out_of_band: return "KOutOfBand";
    case Errc::label_mismatch: return "LabelMismatch";
    case Errc::not_exact_class: return "NotExactClass";
    case Errc::construction_failed_verification: return "ConstructionFailedVerification";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::part_not_connected: return "PartNotConnected";
    case Errc::sub_coloring_invalid: return "SubColoringInvalid";
    case Errc::bad_trace: return "BadTrace";
    case Errc::not_theta: return "NotTheta";
    case Errc::too_large: return "TooLarge";
    case Errc::infeasible_params: return "InfeasibleParams";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library surfaces as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when an exhaustive search would exceed its partition budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t examined)
      : Error(Errc::budget_exceeded,
              "examined " + std::to_string(examined) + " partitions"),
        examined_(examined) {}

  std::uint64_t examined() const noexcept { return examined_; }

 private:
  std::uint64_t examined_;
};

}  // namespace rainbow
