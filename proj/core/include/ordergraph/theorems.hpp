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

#ifndef ORDERGRAPH_THEOREMS_HPP_
#define ORDERGRAPH_THEOREMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordergraph/group.hpp"
#include "ordergraph/linegraph.hpp"
#include "ordergraph/supergraph.hpp"

namespace ordergraph {

enum class GraphProperty { kLineGraph, kComplementOfLineGraph };

std::string_view property_name(GraphProperty property);  // "line", "complement"
GraphProperty parse_property(std::string_view name);

// S(G) is a line graph iff G is EPPO and |G| has at most two prime divisors.
bool predict_line_supergraph(const FiniteGroup& g);

// S*(G) is a line graph iff G is Z6 or EPPO.
bool predict_line_proper_supergraph(const FiniteGroup& g);

// Only defined when S(G) is dominatable; otherwise nullopt. Then S**(G) is a
// line graph iff G is a p-group, or |G| has exactly two prime divisors and
// every element order is square-free.
std::optional<bool> predict_line_reduced_supergraph(const FiniteGroup& g);

// S(G), S*(G) and S**(G) are complements of line graphs iff G is Z6 or a
// p-group.
bool predict_complement_line(const FiniteGroup& g);

// Family corollaries, stated on the family parameter n.
bool dihedral_line(std::uint64_t n);               // D_{2n}: n is a prime power
bool quaternion_reduced_line(std::uint64_t n);     // Q_{4n}: n is a power of two
bool semidihedral_reduced_line(std::uint64_t n);   // SD_{8n}: n = 2^k, k >= 2
// For nilpotent G, S(G) is a line graph iff G is a p-group; nullopt when G
// is not nilpotent.
std::optional<bool> nilpotent_line(const FiniteGroup& g);

std::optional<bool> predict(const FiniteGroup& g, GraphVariant variant, GraphProperty property);

struct TheoremPrediction {
  std::string group;
  std::size_t order = 0;
  GraphVariant variant = GraphVariant::kSupergraph;
  GraphProperty property = GraphProperty::kLineGraph;
  std::optional<bool> predicted;  // nullopt: theorem hypothesis unmet
  bool observed = false;
  bool agree = false;
  std::optional<std::size_t> witness_index;
  // Complement rows only: the direct complemented-pattern search matched
  // is_line_graph on the complement graph.
  bool dual_consistent = true;
  double millis = 0.0;
};

struct CrossCheckOptions {
  std::size_t max_order = 200;
};

// Six rows: {S, S*, S**} x {line, complement}, in that order.
std::vector<TheoremPrediction> cross_check(const FiniteGroup& g, std::string_view name,
                                           const CrossCheckOptions& options = {});

// Columns: group,order,variant,property,predicted,observed,agree,witnessIndex,millis
std::string csv_header();
std::string to_csv_row(const TheoremPrediction& row, bool include_timing = true);

}  // namespace ordergraph

#endif  // ORDERGRAPH_THEOREMS_HPP_
