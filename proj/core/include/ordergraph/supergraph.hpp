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

#ifndef ORDERGRAPH_SUPERGRAPH_HPP_
#define ORDERGRAPH_SUPERGRAPH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordergraph/graph.hpp"
#include "ordergraph/group.hpp"

namespace ordergraph {

enum class GraphVariant {
  kPower,              // P(G)
  kSupergraph,         // S(G)
  kProperSupergraph,   // S*(G) = S(G) - e
  kReducedSupergraph,  // S**(G) = S(G) - Dom(S(G))
};

// "power", "supergraph", "properSupergraph", "reducedSupergraph".
std::string_view variant_name(GraphVariant variant);
// Also accepts the short CLI forms "proper" and "reduced".
GraphVariant parse_variant(std::string_view name);

// A graph on (a subset of) group elements. Vertices follow element index
// order with deleted elements compacted out.
struct LabeledGroupGraph {
  Graph graph;
  std::vector<Element> element_of;
  std::vector<std::uint64_t> order_of;
  GraphVariant variant = GraphVariant::kSupergraph;
};

LabeledGroupGraph power_graph(const FiniteGroup& g);
LabeledGroupGraph order_supergraph(const FiniteGroup& g);
LabeledGroupGraph proper_supergraph(const FiniteGroup& g);
// Removes the dominating vertices found by scanning S(G); a p-group yields
// the vertex-empty graph.
LabeledGroupGraph reduced_supergraph(const FiniteGroup& g);
LabeledGroupGraph build_variant(const FiniteGroup& g, GraphVariant variant);

// Adjacency scan of an S(G) graph. Throws ArgumentError for other variants.
std::vector<Vertex> dominating_vertices(const LabeledGroupGraph& s);

// Some element has order exp(G).
bool is_dominatable(const FiniteGroup& g);

// Graph JSON plus "elements", "orders" and "variant".
std::string to_json(const LabeledGroupGraph& s, int indent = -1);

}  // namespace ordergraph

#endif  // ORDERGRAPH_SUPERGRAPH_HPP_
