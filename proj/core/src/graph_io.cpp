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

#include "ordergraph/graph_io.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordergraph/error.hpp"

namespace ordergraph {

std::string graph_to_json(const Graph& g, int indent) {
  nlohmann::ordered_json out;
  out["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.Edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  if (g.has_labels()) out["labels"] = g.labels();
  return out.dump(indent);
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError("graph JSON needs a non-negative integer field \"n\"");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw ParseError("\"edges\" must be an array");
    std::set<Edge> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& e = list[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned()) {
        throw ParseError("edge " + std::to_string(i) + " must be a pair of vertex indices");
      }
      auto u = e[0].get<std::size_t>();
      auto v = e[1].get<std::size_t>();
      if (u >= n || v >= n) {
        throw ParseError("edge " + std::to_string(i) + " has an endpoint outside [0, n)");
      }
      if (u == v) throw ParseError("edge " + std::to_string(i) + " is a loop");
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) {
        throw ParseError("edge " + std::to_string(i) + " is a duplicate");
      }
      edges.emplace_back(u, v);
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    const auto& list = doc["labels"];
    if (!list.is_array() || list.size() != n) {
      throw ParseError("\"labels\" must be an array with n entries");
    }
    for (const auto& l : list) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Graph::FromEdges(n, edges, std::move(labels));
}

namespace {

std::string QuoteDot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << QuoteDot(std::string(name)) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=" << QuoteDot(g.Label(v)) << "];\n";
  }
  for (const auto& [u, v] : g.Edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ordergraph
