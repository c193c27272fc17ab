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
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordergraph/error.hpp"
#include "ordergraph/graph.hpp"

namespace ordergraph {
namespace {

using Word = Graph::Word;
constexpr std::size_t kBits = Graph::kWordBits;

// Host vertices with identical neighbourhoods apart from each other. Swapping
// two such vertices is a host automorphism, so a search only needs to try the
// lowest-indexed unused member of each class.
class TwinClasses {
 public:
  explicit TwinClasses(const Graph& g) : class_of_(g.vertex_count()) {
    const std::size_t n = g.vertex_count();
    std::map<std::vector<Word>, std::vector<Vertex>> open_groups;
    std::map<std::vector<Word>, std::vector<Vertex>> closed_groups;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Word> row(g.Row(v).begin(), g.Row(v).end());
      open_groups[row].push_back(v);
      row[v / kBits] |= Word{1} << (v % kBits);
      closed_groups[row].push_back(v);
    }
    std::vector<bool> assigned(n, false);
    for (auto* groups : {&open_groups, &closed_groups}) {
      for (auto& [key, members] : *groups) {
        if (members.size() < 2) continue;
        for (Vertex v : members) {
          class_of_[v] = members_.size();
          assigned[v] = true;
        }
        members_.push_back(members);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!assigned[v]) {
        class_of_[v] = members_.size();
        members_.push_back({v});
      }
    }
  }

  // True when a lower-indexed twin of v is still unused.
  bool Dominated(Vertex v, const std::vector<bool>& used) const {
    for (Vertex w : members_[class_of_[v]]) {
      if (w >= v) return false;
      if (!used[w]) return true;
    }
    return false;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<Vertex>> members_;
};

std::vector<Vertex> SearchOrder(const Graph& pattern) {
  const std::size_t k = pattern.vertex_count();
  std::vector<Vertex> order;
  std::vector<bool> placed(k, false);
  std::vector<std::size_t> links(k, 0);
  std::vector<std::size_t> degree(k);
  for (Vertex v = 0; v < k; ++v) degree[v] = pattern.Degree(v);
  for (std::size_t step = 0; step < k; ++step) {
    Vertex best = k;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (best == k || links[v] > links[best] ||
          (links[v] == links[best] && degree[v] > degree[best])) {
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : pattern.Neighbors(best)) ++links[w];
  }
  return order;
}

class InducedSearch {
 public:
  InducedSearch(const Graph& host, const Graph& pattern, bool exact_degree)
      : host_(host),
        pattern_(pattern),
        exact_degree_(exact_degree),
        twins_(host),
        order_(SearchOrder(pattern)),
        host_degree_(host.vertex_count()),
        used_(host.vertex_count(), false),
        map_(pattern.vertex_count(), 0),
        words_(host.words_per_row()) {
    for (Vertex v = 0; v < host.vertex_count(); ++v) host_degree_[v] = host.Degree(v);
  }

  std::optional<Embedding> Run() {
    if (pattern_.vertex_count() > host_.vertex_count()) return std::nullopt;
    if (!Extend(0)) return std::nullopt;
    return Embedding{map_};
  }

 private:
  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    const std::size_t need = pattern_.Degree(p);

    std::vector<Word> candidates(words_, ~Word{0});
    if (words_ > 0 && host_.vertex_count() % kBits != 0) {
      candidates.back() = (Word{1} << (host_.vertex_count() % kBits)) - 1;
    }
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex q = order_[j];
      const auto row = host_.Row(map_[q]);
      const bool edge = pattern_.Adjacent(p, q);
      for (std::size_t w = 0; w < words_; ++w) {
        candidates[w] &= edge ? row[w] : ~row[w];
      }
      candidates[map_[q] / kBits] &= ~(Word{1} << (map_[q] % kBits));
    }

    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = candidates[w];
      while (bits) {
        const Vertex v = w * kBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (used_[v]) continue;
        if (exact_degree_ ? host_degree_[v] != need : host_degree_[v] < need) continue;
        if (twins_.Dominated(v, used_)) continue;
        used_[v] = true;
        map_[p] = v;
        if (Extend(depth + 1)) return true;
        used_[v] = false;
      }
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  bool exact_degree_;
  TwinClasses twins_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> host_degree_;
  std::vector<bool> used_;
  std::vector<Vertex> map_;
  std::size_t words_;
};

}  // namespace

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  return InducedSearch(host, pattern, false).Run();
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding) {
  const std::size_t k = pattern.vertex_count();
  if (embedding.map.size() != k) return false;
  std::vector<Vertex> sorted = embedding.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : embedding.map) {
    if (v >= host.vertex_count()) return false;
  }
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) {
      if (pattern.Adjacent(u, v) != host.Adjacent(embedding.map[u], embedding.map[v])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const IsomorphismOptions& options) {
  for (const Graph* g : {&a, &b}) {
    if (g->vertex_count() > options.max_vertices) {
      throw CapacityError("isomorphism test limited to " + std::to_string(options.max_vertices) +
                          " vertices, got " + std::to_string(g->vertex_count()));
    }
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  if (a.DegreeSequence() != b.DegreeSequence()) return std::nullopt;
  auto embedding = InducedSearch(b, a, true).Run();
  if (!embedding) return std::nullopt;
  return std::move(embedding->map);
}

bool are_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
  return find_isomorphism(a, b, options).has_value();
}

}  // namespace ordergraph
