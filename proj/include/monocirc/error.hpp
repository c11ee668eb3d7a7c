// Copyright 2026 The monocirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monocirc {

/// Raised when an enumeration or expansion would exceed a configured limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_limit, std::size_t requested, std::size_t cap)
      : std::runtime_error(what_limit + " cap exceeded: requested " + std::to_string(requested) +
                           ", cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Text input (formula or serialized circuit) that does not follow the grammar.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument("syntax error at position " + std::to_string(position) + ": " +
                              message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArityMismatch : public std::invalid_argument {
 public:
  ArityMismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("arity mismatch: expected " + std::to_string(expected) + ", got " +
                              std::to_string(actual)) {}
};

/// A check was asked to run on a circuit that does not satisfy its hypothesis
/// (for example, a claim about clique circuits applied to a non-clique circuit).
class HypothesisViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monocirc
