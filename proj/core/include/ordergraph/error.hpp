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

#ifndef ORDERGRAPH_ERROR_HPP_
#define ORDERGRAPH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordergraph {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (Cayley table files, group specs, graph JSON).
// Line and column are 1-based; zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A multiplication table that is well formed but violates a group axiom.
class ValidationError : public Error {
 public:
  ValidationError(std::string axiom, const std::string& detail);

  // One of "closure", "identity", "inverses", "associativity".
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

// A size or parameter outside the configured search/construction budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An index or argument outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordergraph

#endif  // ORDERGRAPH_ERROR_HPP_
