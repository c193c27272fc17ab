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

#include "ordergraph/group.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "ordergraph/error.hpp"

namespace ordergraph {
namespace {

std::string Cell(std::size_t i, std::size_t j) {
  return "table[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

FiniteGroup FiniteGroup::FromTable(std::size_t order, std::vector<Element> table,
                                   std::vector<std::string> labels,
                                   const ValidationOptions& options) {
  if (order == 0) throw ValidationError("closure", "group order must be positive");
  if (table.size() != order * order) {
    throw ValidationError("closure", "expected " + std::to_string(order * order) +
                                         " table entries, got " +
                                         std::to_string(table.size()));
  }
  if (!labels.empty() && labels.size() != order) {
    throw ArgumentError("expected " + std::to_string(order) + " labels, got " +
                        std::to_string(labels.size()));
  }
  const auto at = [&](std::size_t i, std::size_t j) { return table[i * order + j]; };

  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      if (at(i, j) >= order) {
        throw ValidationError("closure", Cell(i, j) + " = " + std::to_string(at(i, j)) +
                                             " is not an element index");
      }
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < order && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw ValidationError("identity", "no two-sided identity element");

  std::vector<Element> inverses(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < order; ++j) {
      if (at(i, j) == *identity) {
        ++hits;
        inverses[i] = static_cast<Element>(j);
      }
    }
    if (hits != 1) {
      throw ValidationError("inverses", "element " + std::to_string(i) + " has " +
                                            std::to_string(hits) +
                                            " right inverses, expected exactly one");
    }
  }

  if (options.check_associativity && order <= options.associativity_limit) {
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        const std::size_t ij = at(i, j);
        for (std::size_t k = 0; k < order; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            throw ValidationError(
                "associativity", "(" + std::to_string(i) + "*" + std::to_string(j) +
                                     ")*" + std::to_string(k) + " != " +
                                     std::to_string(i) + "*(" + std::to_string(j) +
                                     "*" + std::to_string(k) + ")");
          }
        }
      }
    }
  }

  FiniteGroup g;
  g.order_ = order;
  g.identity_ = *identity;
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  if (labels.empty()) {
    labels.resize(order);
    std::size_t next = 1;
    for (std::size_t i = 0; i < order; ++i) {
      labels[i] = i == g.identity_ ? "e" : "g" + std::to_string(next++);
    }
  }
  g.labels_ = std::move(labels);

  g.orders_.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    Element power = static_cast<Element>(x);
    std::uint64_t k = 1;
    while (power != g.identity_) {
      power = g.Multiply(power, static_cast<Element>(x));
      if (++k > order) {
        throw ValidationError("associativity",
                              "powers of element " + std::to_string(x) +
                                  " never reach the identity");
      }
    }
    if (order % k != 0) {
      throw ValidationError("associativity", "element " + std::to_string(x) +
                                                 " has order " + std::to_string(k) +
                                                 " not dividing the group order");
    }
    g.orders_[x] = k;
  }
  return g;
}

Element FiniteGroup::Power(Element x, std::uint64_t k) const {
  const std::uint64_t n = ElementOrder(x);
  k %= n;
  Element result = identity_;
  for (std::uint64_t i = 0; i < k; ++i) result = Multiply(result, x);
  return result;
}

std::uint64_t FiniteGroup::ElementOrder(Element x) const {
  if (x >= order_) {
    throw ArgumentError("element index " + std::to_string(x) + " out of range [0, " +
                        std::to_string(order_) + ")");
  }
  return orders_[x];
}

std::uint64_t element_order(const FiniteGroup& g, Element x) { return g.ElementOrder(x); }

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t result = 1;
  for (std::uint64_t o : g.element_orders()) result = std::lcm(result, o);
  return result;
}

OrderProfile order_profile(const FiniteGroup& g) {
  OrderProfile profile;
  for (std::uint64_t o : g.element_orders()) {
    ++profile.counts[o];
    profile.order_set.insert(o);
  }
  return profile;
}

std::set<std::uint64_t> prime_divisors(const FiniteGroup& g) {
  return arith::prime_factors(g.order());
}

bool is_eppo(const FiniteGroup& g) {
  for (std::uint64_t o : order_profile(g).order_set) {
    if (o != 1 && !arith::is_prime_power(o)) return false;
  }
  return true;
}

bool is_p_group(const FiniteGroup& g) {
  return g.order() == 1 || arith::is_prime_power(g.order());
}

bool is_nilpotent(const FiniteGroup& g) {
  const auto orders = g.element_orders();
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (std::gcd(orders[x], orders[y]) != 1) continue;
      if (!g.Commute(static_cast<Element>(x), static_cast<Element>(y))) return false;
    }
  }
  return true;
}

bool is_isomorphic_to_z6(const FiniteGroup& g) {
  if (g.order() != 6) return false;
  return order_profile(g).counts.contains(6);
}

bool is_abelian(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!g.Commute(static_cast<Element>(x), static_cast<Element>(y))) return false;
    }
  }
  return true;
}

namespace arith {

std::set<std::uint64_t> prime_factors(std::uint64_t n) {
  std::set<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.insert(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.insert(n);
  return primes;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && prime_factors(n).size() == 1; }

bool is_square_free(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return n != 0;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace arith

}  // namespace ordergraph
