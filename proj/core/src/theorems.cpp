// Copyright 2026 The ordergraph Authors
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

#include "ordergraph/theorems.hpp"

#include <chrono>
#include <sstream>
#include <string>

#include "ordergraph/error.hpp"

namespace ordergraph {

std::string_view property_name(GraphProperty property) {
  return property == GraphProperty::kLineGraph ? "line" : "complement";
}

GraphProperty parse_property(std::string_view name) {
  if (name == "line" || name == "lineGraph") return GraphProperty::kLineGraph;
  if (name == "complement" || name == "complementOfLineGraph") {
    return GraphProperty::kComplementOfLineGraph;
  }
  throw ParseError("unknown property '" + std::string(name) + "'");
}

bool predict_line_supergraph(const FiniteGroup& g) {
  return is_eppo(g) && prime_divisors(g).size() <= 2;
}

bool predict_line_proper_supergraph(const FiniteGroup& g) {
  return is_isomorphic_to_z6(g) || is_eppo(g);
}

std::optional<bool> predict_line_reduced_supergraph(const FiniteGroup& g) {
  if (!is_dominatable(g)) return std::nullopt;
  if (is_p_group(g)) return true;
  if (prime_divisors(g).size() != 2) return false;
  for (std::uint64_t o : order_profile(g).order_set) {
    if (!arith::is_square_free(o)) return false;
  }
  return true;
}

bool predict_complement_line(const FiniteGroup& g) {
  return is_isomorphic_to_z6(g) || is_p_group(g);
}

bool dihedral_line(std::uint64_t n) { return arith::is_prime_power(n); }

bool quaternion_reduced_line(std::uint64_t n) { return arith::is_power_of_two(n); }

bool semidihedral_reduced_line(std::uint64_t n) {
  return arith::is_power_of_two(n) && n >= 4;
}

std::optional<bool> nilpotent_line(const FiniteGroup& g) {
  if (!is_nilpotent(g)) return std::nullopt;
  return is_p_group(g);
}

std::optional<bool> predict(const FiniteGroup& g, GraphVariant variant, GraphProperty property) {
  if (property == GraphProperty::kComplementOfLineGraph) {
    if (variant == GraphVariant::kPower) {
      throw ArgumentError("no complement-of-line-graph prediction for the power graph");
    }
    return predict_complement_line(g);
  }
  switch (variant) {
    case GraphVariant::kSupergraph: return predict_line_supergraph(g);
    case GraphVariant::kProperSupergraph: return predict_line_proper_supergraph(g);
    case GraphVariant::kReducedSupergraph: return predict_line_reduced_supergraph(g);
    case GraphVariant::kPower: break;
  }
  throw ArgumentError("no line-graph prediction for the power graph");
}

std::vector<TheoremPrediction> cross_check(const FiniteGroup& g, std::string_view name,
                                           const CrossCheckOptions& options) {
  if (g.order() > options.max_order) {
    throw CapacityError("group " + std::string(name) + " has order " +
                        std::to_string(g.order()) + ", above the recognition budget " +
                        std::to_string(options.max_order));
  }
  using Clock = std::chrono::steady_clock;
  std::vector<TheoremPrediction> rows;
  for (GraphVariant variant : {GraphVariant::kSupergraph, GraphVariant::kProperSupergraph,
                               GraphVariant::kReducedSupergraph}) {
    const auto start = Clock::now();
    const LabeledGroupGraph graph = build_variant(g, variant);
    const double build_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (GraphProperty property :
         {GraphProperty::kLineGraph, GraphProperty::kComplementOfLineGraph}) {
      const auto t0 = Clock::now();
      TheoremPrediction row;
      row.group = std::string(name);
      row.order = g.order();
      row.variant = variant;
      row.property = property;
      row.predicted = predict(g, variant, property);
      RecognitionVerdict verdict;
      if (property == GraphProperty::kLineGraph) {
        verdict = is_line_graph(graph.graph);
      } else {
        verdict = is_complement_of_line_graph(graph.graph);
        row.dual_consistent =
            is_line_graph(complement(graph.graph)).is_member == verdict.is_member;
      }
      row.observed = verdict.is_member;
      if (verdict.witness) row.witness_index = verdict.witness->forbidden_index;
      row.agree = row.dual_consistent && (!row.predicted || *row.predicted == row.observed);
      row.millis = build_ms / 2 +
                   std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string csv_header() {
  return "group,order,variant,property,predicted,observed,agree,witnessIndex,millis";
}

std::string to_csv_row(const TheoremPrediction& row, bool include_timing) {
  const auto flag = [](bool b) { return b ? "T" : "F"; };
  std::ostringstream out;
  out << row.group << ',' << row.order << ',' << variant_name(row.variant) << ','
      << property_name(row.property) << ','
      << (row.predicted ? flag(*row.predicted) : "-") << ',' << flag(row.observed) << ','
      << flag(row.agree) << ',';
  if (row.witness_index) out << *row.witness_index;
  out << ',';
  out.setf(std::ios::fixed);
  out.precision(3);
  out << (include_timing ? row.millis : 0.0);
  return out.str();
}

}  // namespace ordergraph
