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

#ifndef ORDERGRAPH_GRAPH_IO_HPP_
#define ORDERGRAPH_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "ordergraph/graph.hpp"

namespace ordergraph {

// {"n": 4, "edges": [[0,1],[1,2]], "labels": ["a","b","c","d"]}
// Edges are written with i < j in lexicographic order; "labels" is omitted
// for unlabeled graphs. indent < 0 writes a single line.
std::string graph_to_json(const Graph& g, int indent = -1);

// Accepts edges in either orientation; rejects loops, out-of-range
// endpoints, duplicate edges and a label count different from n.
Graph graph_from_json(std::string_view text);

// Undirected DOT with one node statement per vertex carrying its label.
std::string graph_to_dot(const Graph& g, std::string_view name = "G");

}  // namespace ordergraph

#endif  // ORDERGRAPH_GRAPH_IO_HPP_
