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

#include "ordergraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <utility>

#include "ordergraph/error.hpp"

namespace ordergraph {

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count),
      words_((vertex_count + kWordBits - 1) / kWordBits),
      bits_(vertex_count * words_, 0) {}

Graph Graph::FromEdges(std::size_t vertex_count, std::span<const Edge> edges,
                       std::vector<std::string> labels) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  g.SetLabels(std::move(labels));
  return g;
}

void Graph::CheckVertex(Vertex v) const {
  if (v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n_) + ")");
  }
}

void Graph::AddEdge(Vertex u, Vertex v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw ArgumentError("loop at vertex " + std::to_string(u));
  row_ptr(u)[v / kWordBits] |= Word{1} << (v % kWordBits);
  row_ptr(v)[u / kWordBits] |= Word{1} << (u % kWordBits);
}

void Graph::RemoveEdge(Vertex u, Vertex v) {
  CheckVertex(u);
  CheckVertex(v);
  row_ptr(u)[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  row_ptr(v)[u / kWordBits] &= ~(Word{1} << (u % kWordBits));
}

std::size_t Graph::Degree(Vertex v) const {
  CheckVertex(v);
  std::size_t d = 0;
  for (Word w : Row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<Vertex> Graph::Neighbors(Vertex v) const {
  CheckVertex(v);
  std::vector<Vertex> out;
  const auto row = Row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    Word bits = row[w];
    while (bits) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : Neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::DegreeSequence() const {
  std::vector<std::size_t> degrees(n_);
  for (Vertex v = 0; v < n_; ++v) degrees[v] = Degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

std::string Graph::Label(Vertex v) const {
  CheckVertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::SetLabels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw ArgumentError("expected " + std::to_string(n_) + " labels, got " +
                        std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.Adjacent(u, v)) out.AddEdge(u, v);
    }
  }
  out.SetLabels(g.labels());
  return out;
}

Graph disjoint_union(std::span<const Graph> graphs) {
  std::size_t total = 0;
  bool any_labels = false;
  for (const auto& g : graphs) {
    total += g.vertex_count();
    any_labels = any_labels || g.has_labels();
  }
  Graph out(total);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (const auto& g : graphs) {
    for (const auto& [u, v] : g.Edges()) out.AddEdge(offset + u, offset + v);
    if (any_labels) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(g.Label(v));
    }
    offset += g.vertex_count();
  }
  out.SetLabels(std::move(labels));
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  const std::size_t na = a.vertex_count();
  for (Vertex u = 0; u < na; ++u) {
    for (Vertex v = 0; v < b.vertex_count(); ++v) out.AddEdge(u, na + v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : vertices) {
    if (v >= g.vertex_count()) {
      throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(g.vertex_count()) + ")");
    }
    if (seen[v]) throw ArgumentError("vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
  }
  const std::size_t k = vertices.size();
  Graph out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.Adjacent(vertices[i], vertices[j])) out.AddEdge(i, j);
    }
  }
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(k);
    for (Vertex v : vertices) labels.push_back(g.Label(v));
    out.SetLabels(std::move(labels));
  }
  return out;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.Edges();
  const std::size_t m = edges.size();
  Graph out(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.AddEdge(i, j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& [u, v] : edges) labels.push_back("{" + g.Label(u) + "," + g.Label(v) + "}");
  out.SetLabels(std::move(labels));
  return out;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

Graph edgeless(std::size_t n) { return Graph(n); }

Graph complete_bipartite(std::size_t m, std::size_t n) {
  Graph g(m + n);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = 0; v < n; ++v) g.AddEdge(u, m + v);
  }
  return g;
}

Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.AddEdge(v - 1, v);
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ArgumentError("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.AddEdge(n - 1, 0);
  return g;
}

Graph star_forest(std::span<const std::size_t> leaf_counts) {
  std::vector<Graph> stars;
  stars.reserve(leaf_counts.size());
  for (std::size_t leaves : leaf_counts) stars.push_back(star(leaves));
  return disjoint_union(stars);
}

std::vector<Vertex> dominating_vertices(const Graph& g) {
  std::vector<Vertex> out;
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (g.Degree(v) + 1 == n) out.push_back(v);
  }
  return out;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component{root};
    seen[root] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (Vertex w : g.Neighbors(component[i])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

}  // namespace ordergraph
