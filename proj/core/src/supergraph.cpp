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

#include "ordergraph/supergraph.hpp"

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ordergraph/error.hpp"
#include "ordergraph/graph_io.hpp"

namespace ordergraph {
namespace {

LabeledGroupGraph Restrict(const LabeledGroupGraph& s, std::span<const Vertex> keep,
                           GraphVariant variant) {
  LabeledGroupGraph out;
  out.graph = induced_subgraph(s.graph, keep);
  out.variant = variant;
  for (Vertex v : keep) {
    out.element_of.push_back(s.element_of[v]);
    out.order_of.push_back(s.order_of[v]);
  }
  return out;
}

LabeledGroupGraph Skeleton(const FiniteGroup& g, GraphVariant variant) {
  const std::size_t n = g.order();
  LabeledGroupGraph out;
  out.graph = Graph(n);
  out.variant = variant;
  out.element_of.resize(n);
  out.order_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    out.element_of[x] = static_cast<Element>(x);
    out.order_of[x] = g.element_orders()[x];
  }
  out.graph.SetLabels({g.labels().begin(), g.labels().end()});
  return out;
}

}  // namespace

std::string_view variant_name(GraphVariant variant) {
  switch (variant) {
    case GraphVariant::kPower: return "power";
    case GraphVariant::kSupergraph: return "supergraph";
    case GraphVariant::kProperSupergraph: return "properSupergraph";
    case GraphVariant::kReducedSupergraph: return "reducedSupergraph";
  }
  return "unknown";
}

GraphVariant parse_variant(std::string_view name) {
  if (name == "power") return GraphVariant::kPower;
  if (name == "supergraph") return GraphVariant::kSupergraph;
  if (name == "properSupergraph" || name == "proper") return GraphVariant::kProperSupergraph;
  if (name == "reducedSupergraph" || name == "reduced") return GraphVariant::kReducedSupergraph;
  throw ParseError("unknown graph variant '" + std::string(name) + "'");
}

LabeledGroupGraph power_graph(const FiniteGroup& g) {
  LabeledGroupGraph out = Skeleton(g, GraphVariant::kPower);
  const std::size_t n = g.order();
  // Bitset of <x> for every x; u ~ v iff u in <v> or v in <u>.
  std::vector<std::vector<bool>> generated(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    Element power = g.identity();
    for (std::uint64_t k = 0; k < out.order_of[x]; ++k) {
      generated[x][power] = true;
      power = g.Multiply(power, static_cast<Element>(x));
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (generated[u][v] || generated[v][u]) out.graph.AddEdge(u, v);
    }
  }
  return out;
}

LabeledGroupGraph order_supergraph(const FiniteGroup& g) {
  LabeledGroupGraph out = Skeleton(g, GraphVariant::kSupergraph);
  const std::size_t n = g.order();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::uint64_t a = out.order_of[u];
      const std::uint64_t b = out.order_of[v];
      if (a % b == 0 || b % a == 0) out.graph.AddEdge(u, v);
    }
  }
  return out;
}

LabeledGroupGraph proper_supergraph(const FiniteGroup& g) {
  const LabeledGroupGraph s = order_supergraph(g);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.element_of[v] != g.identity()) keep.push_back(v);
  }
  return Restrict(s, keep, GraphVariant::kProperSupergraph);
}

LabeledGroupGraph reduced_supergraph(const FiniteGroup& g) {
  const LabeledGroupGraph s = order_supergraph(g);
  std::vector<bool> dominating(g.order(), false);
  for (Vertex v : dominating_vertices(s)) dominating[v] = true;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!dominating[v]) keep.push_back(v);
  }
  return Restrict(s, keep, GraphVariant::kReducedSupergraph);
}

LabeledGroupGraph build_variant(const FiniteGroup& g, GraphVariant variant) {
  switch (variant) {
    case GraphVariant::kPower: return power_graph(g);
    case GraphVariant::kSupergraph: return order_supergraph(g);
    case GraphVariant::kProperSupergraph: return proper_supergraph(g);
    case GraphVariant::kReducedSupergraph: return reduced_supergraph(g);
  }
  throw ArgumentError("unknown graph variant");
}

std::vector<Vertex> dominating_vertices(const LabeledGroupGraph& s) {
  if (s.variant != GraphVariant::kSupergraph) {
    throw ArgumentError("dominating_vertices expects S(G), got " +
                        std::string(variant_name(s.variant)));
  }
  return dominating_vertices(s.graph);
}

bool is_dominatable(const FiniteGroup& g) {
  const std::uint64_t target = exponent(g);
  for (std::uint64_t o : g.element_orders()) {
    if (o == target) return true;
  }
  return false;
}

std::string to_json(const LabeledGroupGraph& s, int indent) {
  auto out = nlohmann::ordered_json::parse(graph_to_json(s.graph));
  std::vector<std::string> elements;
  elements.reserve(s.graph.vertex_count());
  for (Vertex v = 0; v < s.graph.vertex_count(); ++v) elements.push_back(s.graph.Label(v));
  out["elements"] = elements;
  out["orders"] = s.order_of;
  out["variant"] = variant_name(s.variant);
  return out.dump(indent);
}

}  // namespace ordergraph
