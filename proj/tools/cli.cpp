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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordergraph/census.hpp"
#include "ordergraph/error.hpp"
#include "ordergraph/graph_io.hpp"
#include "ordergraph/group_spec.hpp"
#include "ordergraph/linegraph.hpp"
#include "ordergraph/supergraph.hpp"
#include "ordergraph/theorems.hpp"

namespace ordergraph::cli {
namespace {

using nlohmann::ordered_json;

struct Sink {
  std::string path;

  void Write(std::ostream& fallback, const std::string& text) const {
    if (path.empty() || path == "-") {
      fallback << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw ArgumentError("cannot open '" + path + "' for writing");
    file << text;
  }
};

std::string WithNewline(std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  return text;
}

int Build(const std::string& spec_text, const std::string& variant_text,
          const std::string& format, const Sink& sink, std::ostream& out) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const FiniteGroup g = build_group(spec);
  const LabeledGroupGraph s = build_variant(g, parse_variant(variant_text));
  if (format == "dot") {
    sink.Write(out, graph_to_dot(s.graph, spec.ToString() + " " +
                                              std::string(variant_name(s.variant))));
  } else if (format == "json") {
    sink.Write(out, WithNewline(to_json(s, 2)));
  } else {
    throw ArgumentError("build supports --format json or dot, got '" + format + "'");
  }
  return kOk;
}

int Check(const std::string& spec_text, const std::string& variant_text,
          const std::string& property_text, const Sink& sink, std::ostream& out) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const FiniteGroup g = build_group(spec);
  const GraphVariant variant = parse_variant(variant_text);
  const GraphProperty property = parse_property(property_text);
  const LabeledGroupGraph s = build_variant(g, variant);
  const RecognitionVerdict verdict = property == GraphProperty::kLineGraph
                                         ? is_line_graph(s.graph)
                                         : is_complement_of_line_graph(s.graph);
  const std::optional<bool> predicted = predict(g, variant, property);
  const bool agree = !predicted || *predicted == verdict.is_member;

  ordered_json doc;
  doc["group"] = spec.ToString();
  doc["order"] = g.order();
  doc["variant"] = variant_name(variant);
  doc["property"] = property_name(property);
  doc["verdict"] = ordered_json::parse(to_json(verdict));
  if (verdict.witness) {
    const auto& catalog = ForbiddenCatalog::Instance();
    auto elements = ordered_json::array();
    auto orders = ordered_json::array();
    for (Vertex v : verdict.witness->embedding.map) {
      elements.push_back(s.graph.Label(v));
      orders.push_back(s.order_of[v]);
    }
    doc["witnessName"] = catalog.name(verdict.witness->forbidden_index);
    doc["witnessElements"] = std::move(elements);
    doc["witnessOrders"] = std::move(orders);
  }
  doc["predicted"] = predicted ? ordered_json(*predicted) : ordered_json(nullptr);
  doc["observed"] = verdict.is_member;
  doc["agree"] = agree;
  doc["graph"] = ordered_json::parse(graph_to_json(s.graph));
  sink.Write(out, doc.dump(2) + "\n");
  return agree ? kOk : kDisagreement;
}

int Census(CensusConfig config, const std::vector<std::string>& families,
           const std::string& format, bool timing, const Sink& sink, std::ostream& out,
           std::ostream& err) {
  if (!families.empty()) {
    config.families.clear();
    for (const auto& name : families) config.families.insert(parse_family(name));
  }
  if (format == "json") {
    config.format = OutputFormat::kJson;
  } else if (format == "csv") {
    config.format = OutputFormat::kCsv;
  } else {
    throw ArgumentError("census supports --format csv or json, got '" + format + "'");
  }
  const CensusReport report = run_census(config);
  sink.Write(out, config.format == OutputFormat::kJson ? report_to_json(report, timing)
                                                       : report_to_csv(report, timing));
  const auto& s = report.summary;
  err << "census: " << s.rows << " rows, " << s.agreements << " agreements, "
      << s.disagreements << " disagreements, " << s.hypothesis_skips << " hypothesis skips, "
      << s.errors << " errors, " << s.flagged_probes << " flagged corollary probes\n";
  for (const auto& f : report.failures) err << "census: " << f.group << ": " << f.message << '\n';
  return report.ok() ? kOk : kDisagreement;
}

int Root(const std::string& target, const std::string& variant_text, bool complemented,
         std::optional<std::size_t> max_vertices, const Sink& sink, std::ostream& out) {
  Graph graph;
  if (target.ends_with(".json")) {
    std::ifstream in(target);
    if (!in) throw ParseError("cannot open graph file '" + target + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    graph = graph_from_json(buffer.str());
  } else {
    const FiniteGroup g = build_group(parse_group_spec(target));
    graph = build_variant(g, parse_variant(variant_text)).graph;
  }
  if (complemented) graph = complement(graph);
  RootSearchLimits limits;
  const std::size_t bound = max_vertices.value_or(
      std::min(limits.max_root_vertices, std::max<std::size_t>(2 * graph.vertex_count(), 2)));
  const auto root = brute_force_root_search(graph, bound, limits);
  sink.Write(out, root ? graph_to_json(*root) + "\n" : std::string("none\n"));
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order supergraphs of finite groups and their line-graph structure", "ordergraph"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string variant_text = "supergraph";
  std::string format = "json";
  std::string out_path;

  auto* build = app.add_subcommand("build", "Write P(G), S(G), S*(G) or S**(G) as JSON or DOT");
  build->add_option("group", spec_text, "Group spec, e.g. Z6, D12, Q12, SD16, S3, A4, Z2xZ4, @t.tbl")
      ->required();
  build->add_option("--variant", variant_text, "power | supergraph | proper | reduced");
  build->add_option("--format", format, "json | dot");
  build->add_option("--out", out_path, "Output path (default stdout)");

  std::string property_text = "line";
  auto* check = app.add_subcommand("check", "Recognise one graph and compare with the theorem");
  check->add_option("group", spec_text, "Group spec")->required();
  check->add_option("--variant", variant_text, "supergraph | proper | reduced");
  check->add_option("--property", property_text, "line | complement");
  check->add_option("--out", out_path, "Output path (default stdout)");

  CensusConfig config;
  std::vector<std::string> families;
  std::string census_format = "csv";
  bool no_timing = false;
  auto* census = app.add_subcommand("census", "Cross-check every theorem over a group catalog");
  census->add_option("--maxOrder,--max-order", config.max_order, "Largest group order (<= 200)");
  census->add_option("--families", families,
                     "cyclic, dihedral, dicyclic, semidihedral, symmetric, alternating, products")
      ->delimiter(',');
  auto* workers_opt = census->add_option("--workers", config.workers, "Worker threads (>= 1)");
  census->add_option("--format", census_format, "csv | json");
  census->add_flag("--failFast,--fail-fast", config.fail_fast, "Stop at the first failure");
  census->add_flag("--no-timing", no_timing, "Write zero in timing fields");
  census->add_option("--out", out_path, "Output path (default stdout)");

  std::string target;
  bool complemented = false;
  std::optional<std::size_t> max_vertices;
  auto* root = app.add_subcommand("root", "Search for a graph whose line graph is the target");
  root->add_option("target", target, "Group spec or graph JSON file (*.json)")->required();
  root->add_option("--variant", variant_text, "Graph variant when the target is a group");
  root->add_flag("--complement", complemented, "Use the complement of the target graph");
  root->add_option("--maxVertices,--max-vertices", max_vertices, "Root vertex bound");
  root->add_option("--out", out_path, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFatal;
  }

  try {
    const Sink sink{out_path};
    if (*build) return Build(spec_text, variant_text, format, sink, out);
    if (*check) return Check(spec_text, variant_text, property_text, sink, out);
    if (*census) {
      if (workers_opt->count() == 0) {
        if (const char* env = std::getenv("ORDERGRAPH_WORKERS")) {
          config.workers = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
        }
      }
      return Census(config, families, census_format, !no_timing, sink, out, err);
    }
    if (*root) return Root(target, variant_text, complemented, max_vertices, sink, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFatal;
  }
  return kFatal;
}

}  // namespace ordergraph::cli
