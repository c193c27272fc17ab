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
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "ordergraph/census.hpp"
#include "ordergraph/error.hpp"

namespace ordergraph {
namespace {

std::vector<std::string> Names(const std::vector<CatalogEntry>& catalog) {
  std::vector<std::string> names;
  for (const auto& e : catalog) names.push_back(e.name);
  return names;
}

TEST(CatalogTest, DefaultContents) {
  const auto catalog = default_catalog(CensusConfig{});
  const auto names = Names(catalog);
  const std::set<std::string> set(names.begin(), names.end());
  EXPECT_EQ(set.size(), names.size());
  for (const char* expected : {"Z1", "Z48", "D4", "D48", "Q8", "Q48", "SD16", "SD48", "S3", "S4",
                               "A3", "A4", "Z2xZ4", "Z2xZ2xZ3", "Z3xZ9", "Z2xZ2"}) {
    EXPECT_TRUE(set.contains(expected)) << expected;
  }
  EXPECT_FALSE(set.contains("A5"));  // order 60
  EXPECT_FALSE(set.contains("D2"));
  for (std::size_t i = 1; i < catalog.size(); ++i) EXPECT_LE(catalog[i - 1].order, catalog[i].order);
  EXPECT_GE(catalog.size(), 90u);
}

TEST(CatalogTest, FamilyFilterAndLargerBound) {
  CensusConfig config;
  config.families = {Family::kDihedral};
  const auto dihedral = Names(default_catalog(config));
  ASSERT_EQ(dihedral.size(), 23u);
  EXPECT_EQ(dihedral.front(), "D4");
  EXPECT_EQ(dihedral.back(), "D48");
  config.families = {Family::kCyclic, Family::kDihedral, Family::kDicyclic, Family::kSemidihedral};
  config.max_order = 96;
  const auto grown = Names(default_catalog(config));
  for (const char* name : {"Z96", "D96", "Q96", "SD96"}) {
    EXPECT_NE(std::find(grown.begin(), grown.end(), name), grown.end()) << name;
  }
  config.families = {Family::kAlternating};
  config.max_order = 60;
  EXPECT_EQ(Names(default_catalog(config)), (std::vector<std::string>{"A3", "A4", "A5"}));
}

TEST(ConfigTest, Validation) {
  CensusConfig config;
  config.max_order = 201;
  EXPECT_THROW(config.Validate(), ArgumentError);
  config.max_order = 200;
  EXPECT_NO_THROW(config.Validate());
  config.workers = 0;
  EXPECT_THROW(config.Validate(), ArgumentError);
}

TEST(CensusTest, DefaultCatalogHasNoDisagreements) {
  const CensusReport report = run_census(CensusConfig{});
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.summary.disagreements, 0u);
  EXPECT_EQ(report.summary.errors, 0u);
  EXPECT_EQ(report.rows.size(), 6 * default_catalog(CensusConfig{}).size());
  EXPECT_EQ(report.timing.size(), default_catalog(CensusConfig{}).size());
}

TEST(CensusTest, SummaryMatchesRowTallies) {
  const CensusReport report = run_census(CensusConfig{});
  std::size_t agreements = 0, skips = 0, disagreements = 0, flagged = 0;
  for (const auto& row : report.rows) {
    if (!row.predicted) {
      ++skips;
    } else if (row.agree) {
      ++agreements;
    } else {
      ++disagreements;
    }
  }
  for (const auto& p : report.probes) flagged += p.flagged ? 1 : 0;
  EXPECT_EQ(report.summary.rows, report.rows.size());
  EXPECT_EQ(report.summary.agreements, agreements);
  EXPECT_EQ(report.summary.hypothesis_skips, skips);
  EXPECT_EQ(report.summary.disagreements, disagreements);
  EXPECT_EQ(report.summary.flagged_probes, flagged);
  const CensusSummary again = summarize(report);
  EXPECT_EQ(again.rows, report.summary.rows);
  EXPECT_EQ(again.agreements, report.summary.agreements);
}

TEST(CensusTest, DeterministicAcrossWorkerCounts) {
  CensusConfig one;
  CensusConfig many;
  many.workers = 8;
  const CensusReport a = run_census(one);
  const CensusReport b = run_census(many);
  EXPECT_EQ(report_to_csv(a, false), report_to_csv(b, false));
  EXPECT_EQ(report_to_json(a, false), report_to_json(b, false));
}

TEST(CensusTest, DihedralLineExactlyAtPrimePowers) {
  CensusConfig config;
  config.families = {Family::kDihedral};
  const CensusReport report = run_census(config);
  for (const auto& row : report.rows) {
    if (row.variant != GraphVariant::kSupergraph || row.property != GraphProperty::kLineGraph) continue;
    const std::uint64_t n = row.order / 2;
    EXPECT_EQ(row.observed, arith::is_prime_power(n)) << row.group;
  }
}

TEST(CensusTest, ProbesFlagKnownDiscrepancies) {
  const CensusReport report = run_census(CensusConfig{});
  std::set<std::string> flagged;
  for (const auto& p : report.probes) {
    if (p.flagged) flagged.insert(p.group);
  }
  EXPECT_EQ(flagged, (std::set<std::string>{"Q12", "Q20", "Q28", "Q36", "Q44", "SD16"}));
}

TEST(CensusTest, FailFastStopsOnError) {
  std::vector<CatalogEntry> catalog = default_catalog(CensusConfig{});
  catalog.resize(5);
  catalog.insert(catalog.begin() + 2, CatalogEntry{GroupSpec::Table("/nonexistent.tbl"), "@bad", 0});
  CensusConfig config;
  const CensusReport keep_going = run_census(catalog, config);
  EXPECT_EQ(keep_going.summary.errors, 1u);
  EXPECT_EQ(keep_going.failures.size(), 1u);
  EXPECT_FALSE(keep_going.ok());
  EXPECT_EQ(keep_going.rows.size(), 6u * 5u);
  config.fail_fast = true;
  const CensusReport stopped = run_census(catalog, config);
  EXPECT_TRUE(stopped.truncated);
  EXPECT_FALSE(stopped.ok());
  EXPECT_LT(stopped.rows.size(), keep_going.rows.size());
}

TEST(ReportTest, CsvColumnsAndComments) {
  CensusConfig config;
  config.max_order = 6;
  const std::string csv = report_to_csv(run_census(config), false);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "group,order,variant,property,predicted,observed,agree,witnessIndex,millis");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8) << line;
  }
  EXPECT_EQ(rows, 6u * default_catalog(config).size());
  EXPECT_NE(csv.find("# summary: rows="), std::string::npos);
}

TEST(ReportTest, JsonShape) {
  CensusConfig config;
  config.max_order = 8;
  const auto doc = nlohmann::json::parse(report_to_json(run_census(config)));
  ASSERT_TRUE(doc.contains("rows"));
  ASSERT_TRUE(doc.contains("summary"));
  ASSERT_TRUE(doc.contains("probes"));
  EXPECT_EQ(doc["summary"]["disagreements"], 0);
  const auto& first = doc["rows"][0];
  for (const char* key : {"group", "order", "variant", "property", "predicted", "observed", "agree"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
}

}  // namespace
}  // namespace ordergraph
