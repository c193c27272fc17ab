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

#ifndef ORDERGRAPH_CENSUS_HPP_
#define ORDERGRAPH_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordergraph/group_spec.hpp"
#include "ordergraph/theorems.hpp"

namespace ordergraph {

enum class OutputFormat { kCsv, kJson };

struct CensusConfig {
  static constexpr std::size_t kRecognitionBudget = 200;

  std::size_t max_order = 48;
  std::set<Family> families = {Family::kCyclic,    Family::kDihedral,  Family::kDicyclic,
                               Family::kSemidihedral, Family::kSymmetric, Family::kAlternating,
                               Family::kProduct};
  std::size_t workers = 1;
  OutputFormat format = OutputFormat::kCsv;
  bool fail_fast = false;

  // Throws ArgumentError when max_order exceeds the budget or workers is 0.
  void Validate() const;
};

struct CatalogEntry {
  GroupSpec spec;
  std::string name;
  std::size_t order = 0;
};

// The default catalog filtered by config.families and config.max_order,
// sorted by (order, family name, parameter, name).
std::vector<CatalogEntry> default_catalog(const CensusConfig& config);

// One family corollary evaluated next to the general theorem and the
// observed recognition verdict.
struct CorollaryProbe {
  std::string group;
  std::string corollary;  // "dihedral", "nilpotent", "quaternion", "semidihedral"
  std::uint64_t parameter = 0;
  GraphVariant variant = GraphVariant::kSupergraph;
  std::optional<bool> corollary_prediction;
  std::optional<bool> theorem_prediction;
  bool observed = false;
  bool flagged = false;
  std::string note;
};

struct GroupTiming {
  std::string group;
  double millis = 0.0;
};

struct GroupFailure {
  std::string group;
  std::string message;
};

struct CensusSummary {
  std::size_t rows = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t hypothesis_skips = 0;
  std::size_t errors = 0;
  std::size_t flagged_probes = 0;
};

struct CensusReport {
  std::vector<TheoremPrediction> rows;
  std::vector<CorollaryProbe> probes;
  std::vector<GroupTiming> timing;
  std::vector<GroupFailure> failures;
  CensusSummary summary;
  bool truncated = false;  // fail-fast stopped early

  bool ok() const { return summary.disagreements == 0 && summary.errors == 0 && !truncated; }
};

std::vector<CorollaryProbe> probe_corollaries(const CatalogEntry& entry, const FiniteGroup& g);

CensusReport run_census(const CensusConfig& config);
CensusReport run_census(const std::vector<CatalogEntry>& catalog, const CensusConfig& config);

CensusSummary summarize(const CensusReport& report);

std::string report_to_csv(const CensusReport& report, bool include_timing = true);
std::string report_to_json(const CensusReport& report, bool include_timing = true,
                           int indent = 2);

}  // namespace ordergraph

#endif  // ORDERGRAPH_CENSUS_HPP_
