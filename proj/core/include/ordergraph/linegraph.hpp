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

#ifndef ORDERGRAPH_LINEGRAPH_HPP_
#define ORDERGRAPH_LINEGRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordergraph/graph.hpp"

namespace ordergraph {

// The nine minimal non-line graphs (Beineke) and their complements.
//
// Numbering is 1-based. Four positions are fixed by the shapes used in the
// order-supergraph classification proofs:
//   1  claw K_{1,3}
//   3  K_5 - e
//   5  K_4, plus a vertex joined to two K_4 vertices, plus a pendant on it
//   6  K_2 join (K_2 u K_2)
// Positions 2, 4, 7, 8 and 9 follow the customary drawing order and carry
// no meaning beyond identification.
class ForbiddenCatalog {
 public:
  static const ForbiddenCatalog& Instance();

  static constexpr std::size_t kSize = 9;

  // index is 1-based.
  const Graph& pattern(std::size_t index) const { return patterns_.at(index - 1); }
  const Graph& complement_pattern(std::size_t index) const {
    return complements_.at(index - 1);
  }
  const std::string& name(std::size_t index) const { return names_.at(index - 1); }
  std::span<const Graph> patterns() const { return patterns_; }
  std::span<const Graph> complements() const { return complements_; }

  // 1-based indices by ascending vertex count, ties by index.
  std::span<const std::size_t> search_order() const { return search_order_; }

 private:
  ForbiddenCatalog();

  std::vector<Graph> patterns_;
  std::vector<Graph> complements_;
  std::vector<std::string> names_;
  std::vector<std::size_t> search_order_;
};

struct ForbiddenWitness {
  std::size_t forbidden_index = 0;  // 1-based catalog index
  Embedding embedding;              // pattern vertex -> input vertex
};

struct RecognitionVerdict {
  bool is_member = false;
  std::optional<ForbiddenWitness> witness;  // present iff !is_member
  std::optional<Graph> root_witness;        // L(root) is isomorphic to the input
};

// Line graph iff no catalog pattern is an induced subgraph. Members that are
// disjoint unions of cliques get a verified star-forest root.
RecognitionVerdict is_line_graph(const Graph& g);

// Complement of a line graph iff no complemented pattern is induced.
RecognitionVerdict is_complement_of_line_graph(const Graph& g);

// K_{n1} u ... u K_{nk} -> K_{1,n1} u ... u K_{1,nk}; nullopt otherwise.
std::optional<Graph> root_graph_for_clique_union(const Graph& g);

struct RootSearchLimits {
  std::size_t max_target_vertices = 8;
  std::size_t max_root_vertices = 16;
};

// Exhaustive search for H with |E(H)| = |V(g)|, at most max_vertices
// non-isolated vertices and L(H) isomorphic to g. Throws CapacityError past
// the limits.
std::optional<Graph> brute_force_root_search(const Graph& g, std::size_t max_vertices,
                                             const RootSearchLimits& limits = {});

// {"isMember": bool, "forbiddenIndex": int?, "embedding": [...]?,
//  "rootWitness": <graph JSON>?}
std::string to_json(const RecognitionVerdict& verdict, int indent = -1);

}  // namespace ordergraph

#endif  // ORDERGRAPH_LINEGRAPH_HPP_
