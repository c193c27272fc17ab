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
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ordergraph/error.hpp"
#include "ordergraph/group.hpp"
#include "ordergraph/group_spec.hpp"

namespace ordergraph {
namespace {

using Counts = std::map<std::uint64_t, std::size_t>;

std::string DataFile(const std::string& name) {
  return std::string(ORDERGRAPH_TEST_DATA_DIR) + "/" + name;
}

FiniteGroup Build(const std::string& spec) { return build_group(parse_group_spec(spec)); }

std::vector<std::string> SmallCatalog() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 30; ++n) specs.push_back("Z" + std::to_string(n));
  for (int n = 1; n <= 12; ++n) specs.push_back("D" + std::to_string(2 * n));
  for (int n = 1; n <= 8; ++n) specs.push_back("Q" + std::to_string(4 * n));
  for (int n = 1; n <= 4; ++n) specs.push_back("SD" + std::to_string(8 * n));
  for (const char* s : {"S1", "S2", "S3", "S4", "A3", "A4", "A5", "Z2xZ4", "Z2xZ2xZ3", "Z3xZ9",
                        "Z2xZ2", "S3xZ2", "Q8xZ3"}) {
    specs.emplace_back(s);
  }
  return specs;
}

TEST(BuildGroupTest, CyclicSixOrderCounts) {
  const FiniteGroup g = Build("Z6");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(order_profile(g).counts, (Counts{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
}

TEST(BuildGroupTest, CyclicOrdersMatchGcdFormula) {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    const FiniteGroup g = build_group(GroupSpec::Cyclic(n));
    // Element k of the cyclic builder is a^k.
    for (Element k = 0; k < n; ++k) {
      EXPECT_EQ(g.ElementOrder(k), n / std::gcd<std::uint64_t>(n, k)) << "Z" << n << " a^" << k;
    }
  }
}

TEST(BuildGroupTest, DicyclicTwelveOrderCounts) {
  EXPECT_EQ(order_profile(Build("Q12")).counts,
            (Counts{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}));
}

TEST(BuildGroupTest, DihedralTwelveOrderCounts) {
  EXPECT_EQ(order_profile(Build("D12")).counts, (Counts{{1, 1}, {2, 7}, {3, 2}, {6, 2}}));
}

TEST(BuildGroupTest, QuaternionAndSemidihedralProfiles) {
  EXPECT_EQ(order_profile(Build("Q8")).counts, (Counts{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(order_profile(Build("SD16")).counts, (Counts{{1, 1}, {2, 5}, {4, 6}, {8, 4}}));
  EXPECT_FALSE(is_abelian(Build("SD16")));
  // The presentation degenerates to Z4 x Z2 at n = 1.
  EXPECT_EQ(order_profile(Build("SD8")).counts, (Counts{{1, 1}, {2, 3}, {4, 4}}));
  EXPECT_TRUE(is_abelian(Build("SD8")));
}

TEST(BuildGroupTest, DicyclicHasExactlyOneInvolution) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const auto counts = order_profile(build_group(GroupSpec::Dicyclic(4 * n))).counts;
    EXPECT_EQ(counts.count(2) ? counts.at(2) : 0, 1u) << "Q" << 4 * n;
  }
}

TEST(BuildGroupTest, DihedralHasManyElementsOfOrderAtMostTwo) {
  for (std::uint32_t n = 1; n <= 24; ++n) {
    const FiniteGroup g = build_group(GroupSpec::Dihedral(2 * n));
    const auto orders = g.element_orders();
    const auto small = std::count_if(orders.begin(), orders.end(), [](auto o) { return o <= 2; });
    EXPECT_GE(static_cast<std::size_t>(small), n) << "D" << 2 * n;
  }
}

// Orders of permutations are the lcm of their cycle lengths; enumerated
// here without the Cayley table.
Counts PermutationOrderCounts(int degree, bool even_only) {
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  Counts counts;
  do {
    std::vector<bool> seen(degree, false);
    std::uint64_t order = 1;
    int transpositions = 0;
    for (int s = 0; s < degree; ++s) {
      if (seen[s]) continue;
      std::uint64_t len = 0;
      for (int v = s; !seen[v]; v = perm[v]) {
        seen[v] = true;
        ++len;
      }
      transpositions += static_cast<int>(len) - 1;
      order = std::lcm(order, len);
    }
    if (!even_only || transpositions % 2 == 0) ++counts[order];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

TEST(BuildGroupTest, PermutationGroupsMatchCycleTypeEnumeration) {
  for (int d = 1; d <= 5; ++d) {
    EXPECT_EQ(order_profile(build_group(GroupSpec::Symmetric(d))).counts,
              PermutationOrderCounts(d, false))
        << "S" << d;
    EXPECT_EQ(order_profile(build_group(GroupSpec::Alternating(d))).counts,
              PermutationOrderCounts(d, true))
        << "A" << d;
  }
}

TEST(BuildGroupTest, AllCatalogGroupsSatisfyAxioms) {
  for (const auto& spec : SmallCatalog()) {
    const FiniteGroup g = Build(spec);
    const std::size_t n = g.order();
    for (Element x = 0; x < n; ++x) {
      EXPECT_EQ(g.Multiply(g.identity(), x), x);
      EXPECT_EQ(g.Multiply(x, g.Inverse(x)), g.identity());
    }
    // Re-validate through the raw table path.
    std::ostringstream text;
    write_cayley_table(text, g);
    std::istringstream in(text.str());
    const FiniteGroup again = read_cayley_table(in);
    EXPECT_EQ(order_profile(again), order_profile(g)) << spec;
  }
}

TEST(BuildGroupTest, CapacityErrors) {
  EXPECT_THROW(Build("S7"), CapacityError);
  EXPECT_THROW(Build("Z1000"), CapacityError);
  BuildOptions tight;
  tight.max_order = 10;
  EXPECT_THROW(build_group(parse_group_spec("Z4xZ3"), tight), CapacityError);
  EXPECT_NO_THROW(build_group(parse_group_spec("Z2xZ5"), tight));
}

TEST(BuildGroupTest, TrivialGroupAccepted) {
  const FiniteGroup g = Build("Z1");
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(exponent(g), 1u);
  EXPECT_TRUE(is_p_group(g));
  EXPECT_TRUE(is_eppo(g));
  EXPECT_TRUE(is_nilpotent(g));
  EXPECT_TRUE(prime_divisors(g).empty());
}

TEST(ElementOrderTest, Examples) {
  const FiniteGroup z6 = Build("Z6");
  EXPECT_EQ(element_order(z6, 1), 6u);
  for (const auto& spec : SmallCatalog()) {
    const FiniteGroup g = Build(spec);
    EXPECT_EQ(element_order(g, g.identity()), 1u) << spec;
  }
  const FiniteGroup q12 = Build("Q12");
  std::vector<Element> involutions;
  for (Element x = 0; x < q12.order(); ++x) {
    if (element_order(q12, x) == 2) involutions.push_back(x);
  }
  ASSERT_EQ(involutions.size(), 1u);
  EXPECT_EQ(q12.label(involutions[0]), "a^3");  // a^n with n = 3
}

TEST(ElementOrderTest, OutOfRange) {
  const FiniteGroup g = Build("Z6");
  EXPECT_THROW(element_order(g, 6), ArgumentError);
}

TEST(ElementOrderTest, OrdersDivideGroupOrderAndExponent) {
  for (const auto& spec : SmallCatalog()) {
    const FiniteGroup g = Build(spec);
    const std::uint64_t exp = exponent(g);
    EXPECT_EQ(g.order() % exp, 0u) << spec;
    for (std::uint64_t o : g.element_orders()) {
      EXPECT_EQ(g.order() % o, 0u) << spec;
      EXPECT_EQ(exp % o, 0u) << spec;
    }
  }
}

TEST(ExponentTest, Examples) {
  EXPECT_EQ(exponent(Build("S3")), 6u);
  EXPECT_EQ(exponent(Build("Z6")), 6u);
  EXPECT_EQ(exponent(Build("D12")), 6u);
  EXPECT_EQ(exponent(Build("Q12")), 12u);
  EXPECT_EQ(exponent(Build("A5")), 30u);
}

TEST(OrderProfileTest, Invariants) {
  for (const auto& spec : SmallCatalog()) {
    const FiniteGroup g = Build(spec);
    const OrderProfile p = order_profile(g);
    std::size_t total = 0;
    for (const auto& [order, count] : p.counts) {
      total += count;
      EXPECT_TRUE(p.order_set.contains(order));
    }
    EXPECT_EQ(total, g.order()) << spec;
    EXPECT_EQ(p.counts.at(1), 1u) << spec;
    EXPECT_EQ(p.order_set.size(), p.counts.size());
  }
}

TEST(PrimeDivisorsTest, Examples) {
  using Primes = std::set<std::uint64_t>;
  EXPECT_EQ(prime_divisors(Build("Z8")), (Primes{2}));
  EXPECT_EQ(prime_divisors(Build("S3")), (Primes{2, 3}));
  EXPECT_EQ(prime_divisors(Build("Z30")), (Primes{2, 3, 5}));
}

TEST(PredicateTest, Eppo) {
  EXPECT_TRUE(is_eppo(Build("S3")));
  EXPECT_FALSE(is_eppo(Build("Z6")));
  EXPECT_TRUE(is_eppo(Build("A4")));
  EXPECT_TRUE(is_eppo(Build("A5")));
  EXPECT_TRUE(is_eppo(Build("S4")));
  EXPECT_FALSE(is_eppo(Build("Z10")));
}

TEST(PredicateTest, PGroup) {
  EXPECT_TRUE(is_p_group(Build("Q8")));
  EXPECT_FALSE(is_p_group(Build("D12")));
  EXPECT_TRUE(is_p_group(Build("Z1")));
  EXPECT_TRUE(is_p_group(Build("Z3xZ9")));
}

TEST(PredicateTest, Nilpotent) {
  for (std::uint32_t n = 1; n <= 30; ++n) EXPECT_TRUE(is_nilpotent(build_group(GroupSpec::Cyclic(n))));
  EXPECT_FALSE(is_nilpotent(Build("S3")));
  EXPECT_TRUE(is_nilpotent(Build("Q8")));
  EXPECT_TRUE(is_nilpotent(Build("Q8xZ3")));
  EXPECT_FALSE(is_nilpotent(Build("D12")));
  EXPECT_TRUE(is_nilpotent(Build("D16")));
}

TEST(PredicateTest, ImplicationsOverCatalog) {
  for (const auto& spec : SmallCatalog()) {
    const FiniteGroup g = Build(spec);
    if (is_p_group(g)) {
      EXPECT_TRUE(is_eppo(g)) << spec;
      EXPECT_TRUE(is_nilpotent(g)) << spec;
    }
    if (is_nilpotent(g)) EXPECT_EQ(is_eppo(g), is_p_group(g)) << spec;
  }
}

TEST(PredicateTest, CoprimeCyclicProductIsCyclic) {
  for (std::uint32_t m = 1; m <= 8; ++m) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const FiniteGroup product =
          build_group(GroupSpec::Product({GroupSpec::Cyclic(m), GroupSpec::Cyclic(n)}));
      const FiniteGroup cyclic = build_group(GroupSpec::Cyclic(m * n));
      EXPECT_TRUE(is_abelian(product));
      EXPECT_EQ(order_profile(product), order_profile(cyclic)) << m << "x" << n;
    }
  }
}

TEST(PredicateTest, ZSixRecognition) {
  EXPECT_TRUE(is_isomorphic_to_z6(Build("Z6")));
  EXPECT_TRUE(is_isomorphic_to_z6(Build("Z2xZ3")));
  EXPECT_FALSE(is_isomorphic_to_z6(Build("S3")));
  EXPECT_FALSE(is_isomorphic_to_z6(Build("D6")));
  EXPECT_FALSE(is_isomorphic_to_z6(Build("Z12")));
}

TEST(ArithTest, Helpers) {
  EXPECT_TRUE(arith::is_prime_power(9));
  EXPECT_FALSE(arith::is_prime_power(1));
  EXPECT_FALSE(arith::is_prime_power(12));
  EXPECT_TRUE(arith::is_square_free(1));
  EXPECT_TRUE(arith::is_square_free(30));
  EXPECT_FALSE(arith::is_square_free(12));
  EXPECT_TRUE(arith::is_power_of_two(1));
  EXPECT_FALSE(arith::is_power_of_two(6));
}

TEST(GroupSpecTest, ParseAndPrint) {
  for (const char* text : {"Z6", "D12", "Q12", "SD16", "S3", "A4", "Z2xZ4", "Z2xZ2xZ3", "@klein.tbl"}) {
    EXPECT_EQ(parse_group_spec(text).ToString(), text);
  }
  const GroupSpec p = parse_group_spec("Z2xZ4");
  ASSERT_EQ(p.family, Family::kProduct);
  EXPECT_EQ(p.factors, (std::vector<GroupSpec>{GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)}));
  EXPECT_EQ(parse_group_spec("@dir/x.tbl").path, "dir/x.tbl");
  EXPECT_EQ(spec_order(parse_group_spec("S4xZ2")), 48u);
}

TEST(GroupSpecTest, Malformed) {
  for (const char* text : {"", "Z", "Z0", "D7", "Q6", "SD12", "K5", "Z3x", "xZ3", "Z-1", "@"}) {
    EXPECT_THROW(parse_group_spec(text), ParseError) << text;
  }
}

TEST(CayleyTableTest, ReadsKleinWithLabels) {
  const FiniteGroup g = build_group(parse_group_spec("@" + DataFile("klein.tbl")));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.label(3), "ab");
  EXPECT_EQ(order_profile(g).counts, (Counts{{1, 1}, {2, 3}}));
}

TEST(CayleyTableTest, IdentityNeedNotBeIndexZero) {
  const FiniteGroup g = read_cayley_table_file(DataFile("z3_reordered.tbl"));
  EXPECT_EQ(g.identity(), 1u);
  EXPECT_EQ(g.label(g.identity()), "e");
  EXPECT_EQ(element_order(g, 0), 3u);
}

TEST(CayleyTableTest, NonAssociativeTableNamesAxiom) {
  try {
    read_cayley_table_file(DataFile("bad_assoc.tbl"));
    FAIL() << "expected a ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
  }
}

TEST(CayleyTableTest, MissingIdentity) {
  try {
    read_cayley_table_file(DataFile("no_identity.tbl"));
    FAIL() << "expected a ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "identity");
  }
}

TEST(CayleyTableTest, DuplicateInverseRejected) {
  // Row 1 of this table hits the identity twice.
  std::vector<Element> table = {0, 1, 2, 1, 0, 0, 2, 0, 1};
  try {
    FiniteGroup::FromTable(3, table);
    FAIL() << "expected a ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "inverses");
  }
}

TEST(CayleyTableTest, ClosureViolationFromRawTable) {
  try {
    FiniteGroup::FromTable(2, {0, 1, 1, 5});
    FAIL() << "expected a ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.axiom(), "closure");
  }
}

TEST(CayleyTableTest, AssociativityCheckCanBeGated) {
  ValidationOptions options;
  options.associativity_limit = 4;
  // Order 5 is above the limit, so the loop gets past the associativity
  // check and is caught by the element-order post-check instead.
  EXPECT_THROW(read_cayley_table_file(DataFile("bad_assoc.tbl"), options), ValidationError);
}

TEST(CayleyTableTest, ParseErrorsCarryLocation) {
  struct Case {
    const char* file;
    std::size_t line;
    std::size_t column;
  };
  for (const Case& c : {Case{"bad_token.tbl", 3, 3}, Case{"short_row.tbl", 3, 4},
                        Case{"out_of_range.tbl", 3, 3}}) {
    try {
      read_cayley_table_file(DataFile(c.file));
      FAIL() << c.file;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.file << ": " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.file << ": " << e.what();
    }
  }
  EXPECT_THROW(read_cayley_table_file(DataFile("does_not_exist.tbl")), ParseError);
}

TEST(CayleyTableTest, LabelLineMustMatchOrder) {
  std::istringstream in("2\n0 1\n1 0\n#labels e\n");
  EXPECT_THROW(read_cayley_table(in), ParseError);
}

}  // namespace
}  // namespace ordergraph
