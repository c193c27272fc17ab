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

#include "ordergraph/linegraph.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ordergraph/error.hpp"
#include "ordergraph/graph_io.hpp"

namespace ordergraph {
namespace {

std::optional<ForbiddenWitness> FindForbidden(const Graph& g, bool complemented) {
  const auto& catalog = ForbiddenCatalog::Instance();
  for (std::size_t index : catalog.search_order()) {
    const Graph& pattern =
        complemented ? catalog.complement_pattern(index) : catalog.pattern(index);
    if (auto embedding = contains_induced(g, pattern)) {
      return ForbiddenWitness{index, std::move(*embedding)};
    }
  }
  return std::nullopt;
}

// Enumerates edge lists in lexicographic order where every vertex first
// appears as the next unused label. Every graph without isolated vertices
// has such a labelling (number vertices in BFS order, component by
// component), so nothing is missed.
class RootEnumerator {
 public:
  RootEnumerator(const Graph& target, std::size_t max_vertices)
      : target_(target),
        edges_needed_(target.vertex_count()),
        max_vertices_(max_vertices),
        target_degrees_(target.DegreeSequence()),
        max_root_degree_(target_degrees_.empty() ? 0 : target_degrees_.front() + 1),
        degree_(max_vertices, 0) {}

  std::optional<Graph> Run() {
    if (Extend(0, 0, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool Extend(std::size_t used, Vertex min_u, Vertex min_v) {
    if (edges_.size() == edges_needed_) return Check(used);
    for (Vertex u = min_u; u <= used && u < max_vertices_; ++u) {
      const bool u_new = u == used;
      const Vertex v_first = u == min_u ? std::max(min_v, u + 1) : u + 1;
      const Vertex v_last = u_new ? used + 1 : used;
      for (Vertex v = v_first; v <= v_last && v < max_vertices_; ++v) {
        if (u_new && v != used + 1) continue;
        if (degree_[u] + 1 > max_root_degree_ || degree_[v] + 1 > max_root_degree_) continue;
        const std::size_t next_used = std::max(used, v + 1);
        edges_.emplace_back(u, v);
        ++degree_[u];
        ++degree_[v];
        const bool hit = Extend(next_used, u, v + 1);
        --degree_[u];
        --degree_[v];
        edges_.pop_back();
        if (hit) return true;
      }
    }
    return false;
  }

  bool Check(std::size_t used) {
    Graph root = Graph::FromEdges(used, edges_);
    Graph line = line_graph(root);
    if (line.DegreeSequence() != target_degrees_) return false;
    IsomorphismOptions options;
    options.max_vertices = std::max<std::size_t>(options.max_vertices, edges_needed_);
    if (!are_isomorphic(line, target_, options)) return false;
    found_ = std::move(root);
    return true;
  }

  const Graph& target_;
  std::size_t edges_needed_;
  std::size_t max_vertices_;
  std::vector<std::size_t> target_degrees_;
  std::size_t max_root_degree_;
  std::vector<std::size_t> degree_;
  std::vector<Edge> edges_;
  Graph found_;
};

}  // namespace

RecognitionVerdict is_line_graph(const Graph& g) {
  RecognitionVerdict verdict;
  verdict.witness = FindForbidden(g, false);
  verdict.is_member = !verdict.witness.has_value();
  if (verdict.is_member) verdict.root_witness = root_graph_for_clique_union(g);
  return verdict;
}

RecognitionVerdict is_complement_of_line_graph(const Graph& g) {
  RecognitionVerdict verdict;
  verdict.witness = FindForbidden(g, true);
  verdict.is_member = !verdict.witness.has_value();
  return verdict;
}

std::optional<Graph> root_graph_for_clique_union(const Graph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& component : connected_components(g)) {
    for (Vertex v : component) {
      if (g.Degree(v) + 1 != component.size()) return std::nullopt;
    }
    sizes.push_back(component.size());
  }
  Graph root = star_forest(sizes);
  IsomorphismOptions options;
  options.max_vertices = std::max(options.max_vertices, g.vertex_count());
  if (!are_isomorphic(line_graph(root), g, options)) return std::nullopt;
  return root;
}

std::optional<Graph> brute_force_root_search(const Graph& g, std::size_t max_vertices,
                                             const RootSearchLimits& limits) {
  if (g.vertex_count() > limits.max_target_vertices) {
    throw CapacityError("root search limited to targets with " +
                        std::to_string(limits.max_target_vertices) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  }
  if (max_vertices > limits.max_root_vertices) {
    throw CapacityError("root search limited to " + std::to_string(limits.max_root_vertices) +
                        " root vertices, asked for " + std::to_string(max_vertices));
  }
  if (g.vertex_count() == 0) return Graph();
  return RootEnumerator(g, max_vertices).Run();
}

std::string to_json(const RecognitionVerdict& verdict, int indent) {
  nlohmann::ordered_json out;
  out["isMember"] = verdict.is_member;
  if (verdict.witness) {
    out["forbiddenIndex"] = verdict.witness->forbidden_index;
    out["embedding"] = verdict.witness->embedding.map;
  }
  if (verdict.root_witness) {
    out["rootWitness"] = nlohmann::ordered_json::parse(graph_to_json(*verdict.root_witness));
  }
  return out.dump(indent);
}

}  // namespace ordergraph
