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

#include "ordergraph/error.hpp"

#include <string>
#include <utility>

namespace ordergraph {
namespace {

std::string WithLocation(const std::string& message, std::size_t line,
                         std::size_t column) {
  if (line == 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(WithLocation(message, line, column)), line_(line), column_(column) {}

ValidationError::ValidationError(std::string axiom, const std::string& detail)
    : Error("group axiom violated (" + axiom + "): " + detail),
      axiom_(std::move(axiom)) {}

}  // namespace ordergraph
