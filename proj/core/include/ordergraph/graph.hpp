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

#ifndef ORDERGRAPH_GRAPH_HPP_
#define ORDERGRAPH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordergraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph stored as bitset adjacency rows. Vertex labels are
// optional: either empty or one per vertex.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  // Throws ArgumentError on loops, out-of-range endpoints or a label count
  // that does not match. Duplicate edges are collapsed.
  static Graph FromEdges(std::size_t vertex_count, std::span<const Edge> edges,
                         std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const;
  bool empty() const { return n_ == 0; }

  bool Adjacent(Vertex u, Vertex v) const {
    return (row_ptr(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void AddEdge(Vertex u, Vertex v);
  void RemoveEdge(Vertex u, Vertex v);

  std::size_t Degree(Vertex v) const;
  std::vector<Vertex> Neighbors(Vertex v) const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> Edges() const;
  std::vector<std::size_t> DegreeSequence() const;  // sorted, descending

  // Raw adjacency row; bits at positions >= vertex_count() are zero.
  std::span<const Word> Row(Vertex v) const { return {row_ptr(v), words_}; }
  std::size_t words_per_row() const { return words_; }

  bool has_labels() const { return !labels_.empty(); }
  // Falls back to the decimal vertex index when unlabeled.
  std::string Label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  void SetLabels(std::vector<std::string> labels);

  // Same vertex count and adjacency; labels ignored.
  bool SameAdjacency(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }
  bool operator==(const Graph&) const = default;

 private:
  const Word* row_ptr(Vertex v) const { return bits_.data() + v * words_; }
  Word* row_ptr(Vertex v) { return bits_.data() + v * words_; }
  void CheckVertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
  std::vector<std::string> labels_;
};

// Injective map from pattern vertices to host vertices preserving both
// edges and non-edges.
struct Embedding {
  std::vector<Vertex> map;

  bool operator==(const Embedding&) const = default;
};

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> graphs);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
// Throws ArgumentError for out-of-range or repeated vertices.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
// Vertices follow Edges() order; each label is "{lu,lv}".
Graph line_graph(const Graph& g);

// Builders.
Graph complete(std::size_t n);
Graph edgeless(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph star(std::size_t leaves);  // K_{1,n}, centre is vertex 0
Graph path(std::size_t n);
Graph cycle(std::size_t n);  // n >= 3
Graph star_forest(std::span<const std::size_t> leaf_counts);

// Induced-subgraph search. Patterns are matched in decreasing-degree,
// connectivity-first order; interchangeable host twins are tried once.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);
bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding);

struct IsomorphismOptions {
  std::size_t max_vertices = 16;
};

// Throws CapacityError when either graph exceeds options.max_vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const IsomorphismOptions& options = {});
bool are_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options = {});

// Vertices adjacent to every other vertex.
std::vector<Vertex> dominating_vertices(const Graph& g);
bool is_complete(const Graph& g);
// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace ordergraph

#endif  // ORDERGRAPH_GRAPH_HPP_
