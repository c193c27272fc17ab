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

#ifndef ORDERGRAPH_GROUP_HPP_
#define ORDERGRAPH_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ordergraph {

// Index of a group element inside its Cayley table.
using Element = std::uint32_t;

struct ValidationOptions {
  bool check_associativity = true;
  // Associativity is O(n^3); tables larger than this skip the check.
  std::size_t associativity_limit = 256;
};

// A finite group stored as a dense Cayley table. Immutable once built;
// element orders are computed eagerly at construction.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and (optionally) associativity and
  // throws ValidationError naming the first failed axiom. The identity is
  // located from the table. Empty `labels` produces "e", "g1", "g2", ...
  static FiniteGroup FromTable(std::size_t order, std::vector<Element> table,
                               std::vector<std::string> labels = {},
                               const ValidationOptions& options = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }

  Element Multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element Inverse(Element x) const { return inverses_.at(x); }
  Element Power(Element x, std::uint64_t k) const;

  const std::string& label(Element x) const { return labels_.at(x); }
  std::span<const std::string> labels() const { return labels_; }

  // Throws ArgumentError when x is out of range.
  std::uint64_t ElementOrder(Element x) const;
  std::span<const std::uint64_t> element_orders() const { return orders_; }

  bool Commute(Element a, Element b) const {
    return Multiply(a, b) == Multiply(b, a);
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::string> labels_;
};

// Element order -> number of elements with that order.
struct OrderProfile {
  std::map<std::uint64_t, std::size_t> counts;
  std::set<std::uint64_t> order_set;

  bool operator==(const OrderProfile&) const = default;
};

std::uint64_t element_order(const FiniteGroup& g, Element x);
std::uint64_t exponent(const FiniteGroup& g);
OrderProfile order_profile(const FiniteGroup& g);
std::set<std::uint64_t> prime_divisors(const FiniteGroup& g);

// Every element order is 1 or a prime power.
bool is_eppo(const FiniteGroup& g);
// |G| is a prime power; the trivial group counts as a p-group.
bool is_p_group(const FiniteGroup& g);
// Elements of coprime orders always commute.
bool is_nilpotent(const FiniteGroup& g);
// The two groups of order 6 differ by exponent, so an element of order 6
// identifies Z6.
bool is_isomorphic_to_z6(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

namespace arith {

std::set<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime_power(std::uint64_t n);  // true for primes and their powers
bool is_square_free(std::uint64_t n);  // 1 is square-free
bool is_power_of_two(std::uint64_t n);

}  // namespace arith

}  // namespace ordergraph

#endif  // ORDERGRAPH_GROUP_HPP_
