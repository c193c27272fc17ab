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

#include <algorithm>
#include <utility>
#include <vector>

#include "ordergraph/linegraph.hpp"

namespace ordergraph {
namespace {

struct PatternSpec {
  const char* name;
  std::size_t vertices;
  std::vector<Edge> edges;
};

const std::vector<PatternSpec>& Specs() {
  static const std::vector<PatternSpec> specs = {
      {"claw K_{1,3}", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {"K_{2,3} plus an edge", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}},
      {"K_5 - e", 5,
       {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
      {"K_4 - e with pendants at both degree-2 vertices", 6,
       {{0, 1}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}},
      {"K_4 plus a vertex on one K_4 edge, with a pendant", 6,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {4, 5}}},
      {"K_2 join 2K_2", 6,
       {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
      {"C_5 plus a vertex on three consecutive cycle vertices", 6,
       {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}},
      {"strip of four triangles", 6,
       {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}},
      {"wheel W_5", 6,
       {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
  };
  return specs;
}

}  // namespace

ForbiddenCatalog::ForbiddenCatalog() {
  for (const auto& spec : Specs()) {
    patterns_.push_back(Graph::FromEdges(spec.vertices, spec.edges));
    complements_.push_back(complement(patterns_.back()));
    names_.emplace_back(spec.name);
  }
  for (std::size_t i = 1; i <= patterns_.size(); ++i) search_order_.push_back(i);
  std::stable_sort(search_order_.begin(), search_order_.end(), [&](std::size_t a, std::size_t b) {
    return patterns_[a - 1].vertex_count() < patterns_[b - 1].vertex_count();
  });
}

const ForbiddenCatalog& ForbiddenCatalog::Instance() {
  static const ForbiddenCatalog catalog;
  return catalog;
}

}  // namespace ordergraph
