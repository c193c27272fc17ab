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

#include "ordergraph/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "ordergraph/error.hpp"

namespace ordergraph {
namespace {

struct GroupResult {
  std::vector<TheoremPrediction> rows;
  std::vector<CorollaryProbe> probes;
  std::optional<std::string> error;
  double millis = 0.0;
  bool done = false;
};

GroupResult RunOne(const CatalogEntry& entry, const CensusConfig& config) {
  GroupResult result;
  const auto start = std::chrono::steady_clock::now();
  try {
    BuildOptions build;
    build.max_order = std::max<std::size_t>(config.max_order, 1);
    const FiniteGroup g = build_group(entry.spec, build);
    CrossCheckOptions options;
    options.max_order = CensusConfig::kRecognitionBudget;
    result.rows = cross_check(g, entry.name, options);
    result.probes = probe_corollaries(entry, g);
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  result.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  result.done = true;
  return result;
}

bool Failed(const GroupResult& r) {
  if (r.error) return true;
  return std::any_of(r.rows.begin(), r.rows.end(), [](const auto& row) { return !row.agree; });
}

CorollaryProbe MakeProbe(const CatalogEntry& entry, std::string corollary,
                         std::uint64_t parameter, GraphVariant variant,
                         std::optional<bool> corollary_prediction,
                         std::optional<bool> theorem_prediction, bool observed) {
  CorollaryProbe probe;
  probe.group = entry.name;
  probe.corollary = std::move(corollary);
  probe.parameter = parameter;
  probe.variant = variant;
  probe.corollary_prediction = corollary_prediction;
  probe.theorem_prediction = theorem_prediction;
  probe.observed = observed;
  std::vector<std::string> notes;
  if (!theorem_prediction) {
    notes.push_back("S(G) is not dominatable, so the general theorem does not apply; "
                    "corollary compared with the raw verdict on G \\ Dom(S(G))");
  }
  if (corollary_prediction && *corollary_prediction != observed) {
    notes.push_back("corollary disagrees with the observed verdict");
  }
  if (corollary_prediction && theorem_prediction && *corollary_prediction != *theorem_prediction) {
    notes.push_back("corollary disagrees with the general theorem");
  }
  probe.flagged = !notes.empty();
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) probe.note += "; ";
    probe.note += notes[i];
  }
  return probe;
}

std::string Flag(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "T" : "F";
}

nlohmann::ordered_json OptionalBool(const std::optional<bool>& b) {
  return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
}

// RFC 4180 quoting, only when needed.
std::string CsvQuote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void CensusConfig::Validate() const {
  if (max_order > kRecognitionBudget) {
    throw ArgumentError("maxOrder " + std::to_string(max_order) +
                        " exceeds the recognition budget " +
                        std::to_string(kRecognitionBudget));
  }
  if (workers == 0) throw ArgumentError("workers must be at least 1");
}

std::vector<CatalogEntry> default_catalog(const CensusConfig& config) {
  // The cyclic and semidirect families grow with the bound; at the default
  // of 48 this is Z1..Z48, D4..D48, Q8..Q48 and SD16..SD48.
  const auto bound = static_cast<std::uint32_t>(config.max_order);
  std::vector<GroupSpec> specs;
  for (std::uint32_t n = 1; n <= bound; ++n) specs.push_back(GroupSpec::Cyclic(n));
  for (std::uint32_t n = 2; 2 * n <= bound; ++n) specs.push_back(GroupSpec::Dihedral(2 * n));
  for (std::uint32_t n = 2; 4 * n <= bound; ++n) specs.push_back(GroupSpec::Dicyclic(4 * n));
  for (std::uint32_t n = 2; 8 * n <= bound; ++n) specs.push_back(GroupSpec::Semidihedral(8 * n));
  for (std::uint32_t n = 3; n <= 5; ++n) specs.push_back(GroupSpec::Symmetric(n));
  for (std::uint32_t n = 3; n <= 5; ++n) specs.push_back(GroupSpec::Alternating(n));
  for (const char* text : {"Z2xZ4", "Z2xZ2xZ3", "Z3xZ9", "Z2xZ2"}) {
    specs.push_back(parse_group_spec(text));
  }

  std::vector<CatalogEntry> catalog;
  for (auto& spec : specs) {
    if (!config.families.contains(spec.family)) continue;
    const std::size_t order = spec_order(spec);
    if (order > config.max_order) continue;
    std::string name = spec.ToString();
    catalog.push_back({std::move(spec), std::move(name), order});
  }
  std::sort(catalog.begin(), catalog.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::make_tuple(a.order, family_name(a.spec.family), a.spec.parameter, a.name) <
           std::make_tuple(b.order, family_name(b.spec.family), b.spec.parameter, b.name);
  });
  return catalog;
}

std::vector<CorollaryProbe> probe_corollaries(const CatalogEntry& entry, const FiniteGroup& g) {
  std::vector<CorollaryProbe> probes;
  const auto observe = [&](GraphVariant variant) {
    return is_line_graph(build_variant(g, variant).graph).is_member;
  };
  switch (entry.spec.family) {
    case Family::kDihedral: {
      const std::uint64_t n = g.order() / 2;
      probes.push_back(MakeProbe(entry, "dihedral", n, GraphVariant::kSupergraph,
                                 dihedral_line(n), predict_line_supergraph(g),
                                 observe(GraphVariant::kSupergraph)));
      break;
    }
    case Family::kDicyclic: {
      const std::uint64_t n = g.order() / 4;
      probes.push_back(MakeProbe(entry, "quaternion", n, GraphVariant::kReducedSupergraph,
                                 quaternion_reduced_line(n), predict_line_reduced_supergraph(g),
                                 observe(GraphVariant::kReducedSupergraph)));
      break;
    }
    case Family::kSemidihedral: {
      const std::uint64_t n = g.order() / 8;
      probes.push_back(MakeProbe(entry, "semidihedral", n, GraphVariant::kReducedSupergraph,
                                 semidihedral_reduced_line(n),
                                 predict_line_reduced_supergraph(g),
                                 observe(GraphVariant::kReducedSupergraph)));
      break;
    }
    default:
      break;
  }
  if (const auto nilpotent = nilpotent_line(g)) {
    probes.push_back(MakeProbe(entry, "nilpotent", g.order(), GraphVariant::kSupergraph,
                               nilpotent, predict_line_supergraph(g),
                               observe(GraphVariant::kSupergraph)));
  }
  return probes;
}

CensusReport run_census(const CensusConfig& config) {
  config.Validate();
  return run_census(default_catalog(config), config);
}

CensusReport run_census(const std::vector<CatalogEntry>& catalog, const CensusConfig& config) {
  config.Validate();
  std::vector<GroupResult> results(catalog.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  const auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= catalog.size()) return;
      results[i] = RunOne(catalog[i], config);
      if (config.fail_fast && Failed(results[i])) stop.store(true);
    }
  };
  const std::size_t threads = std::min(config.workers, std::max<std::size_t>(catalog.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CensusReport report;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto& r = results[i];
    if (!r.done) {
      report.truncated = true;
      continue;
    }
    if (r.error) report.failures.push_back({catalog[i].name, *r.error});
    report.timing.push_back({catalog[i].name, r.millis});
    std::move(r.rows.begin(), r.rows.end(), std::back_inserter(report.rows));
    std::move(r.probes.begin(), r.probes.end(), std::back_inserter(report.probes));
  }
  report.summary = summarize(report);
  return report;
}

CensusSummary summarize(const CensusReport& report) {
  CensusSummary s;
  s.rows = report.rows.size();
  for (const auto& row : report.rows) {
    if (!row.agree) {
      ++s.disagreements;
    } else if (!row.predicted) {
      ++s.hypothesis_skips;
    } else {
      ++s.agreements;
    }
  }
  s.errors = report.failures.size();
  s.flagged_probes = static_cast<std::size_t>(std::count_if(
      report.probes.begin(), report.probes.end(), [](const auto& p) { return p.flagged; }));
  return s;
}

std::string report_to_csv(const CensusReport& report, bool include_timing) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& row : report.rows) out << to_csv_row(row, include_timing) << '\n';
  const auto& s = report.summary;
  out << "# summary: rows=" << s.rows << " agreements=" << s.agreements
      << " disagreements=" << s.disagreements << " hypothesisSkips=" << s.hypothesis_skips
      << " errors=" << s.errors << " flaggedProbes=" << s.flagged_probes
      << (report.truncated ? " truncated" : "") << '\n';
  for (const auto& f : report.failures) {
    out << "# error," << f.group << ',' << CsvQuote(f.message) << '\n';
  }
  out << "# probe,group,corollary,parameter,variant,corollaryPrediction,theoremPrediction,observed,flagged,note\n";
  for (const auto& p : report.probes) {
    out << "# probe," << p.group << ',' << p.corollary << ',' << p.parameter << ','
        << variant_name(p.variant) << ',' << Flag(p.corollary_prediction) << ','
        << Flag(p.theorem_prediction) << ',' << (p.observed ? "T" : "F") << ','
        << (p.flagged ? "FLAG" : "ok") << ',' << CsvQuote(p.note) << '\n';
  }
  return out.str();
}

std::string report_to_json(const CensusReport& report, bool include_timing, int indent) {
  nlohmann::ordered_json out;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["group"] = row.group;
    r["order"] = row.order;
    r["variant"] = variant_name(row.variant);
    r["property"] = property_name(row.property);
    r["predicted"] = OptionalBool(row.predicted);
    r["observed"] = row.observed;
    r["agree"] = row.agree;
    r["witnessIndex"] = row.witness_index ? nlohmann::ordered_json(*row.witness_index)
                                          : nlohmann::ordered_json(nullptr);
    r["dualConsistent"] = row.dual_consistent;
    r["millis"] = include_timing ? row.millis : 0.0;
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  auto probes = nlohmann::ordered_json::array();
  for (const auto& p : report.probes) {
    nlohmann::ordered_json j;
    j["group"] = p.group;
    j["corollary"] = p.corollary;
    j["parameter"] = p.parameter;
    j["variant"] = variant_name(p.variant);
    j["corollaryPrediction"] = OptionalBool(p.corollary_prediction);
    j["theoremPrediction"] = OptionalBool(p.theorem_prediction);
    j["observed"] = p.observed;
    j["flagged"] = p.flagged;
    j["note"] = p.note;
    probes.push_back(std::move(j));
  }
  out["probes"] = std::move(probes);
  const auto& s = report.summary;
  out["summary"] = {{"rows", s.rows},
                    {"agreements", s.agreements},
                    {"disagreements", s.disagreements},
                    {"hypothesisSkips", s.hypothesis_skips},
                    {"errors", s.errors},
                    {"flaggedProbes", s.flagged_probes},
                    {"truncated", report.truncated}};
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) failures.push_back({{"group", f.group}, {"message", f.message}});
  out["failures"] = std::move(failures);
  auto timing = nlohmann::ordered_json::array();
  for (const auto& t : report.timing) {
    timing.push_back({{"group", t.group}, {"millis", include_timing ? t.millis : 0.0}});
  }
  out["timing"] = std::move(timing);
  return out.dump(indent) + "\n";
}

}  // namespace ordergraph
