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

// Evaluation, truth tables, monotonicity and exhaustive equivalence checking.
// Everything else in the library is tested against this layer.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monocirc/circuit.hpp"

namespace monocirc {

/// A full input vector. Index encoding: bit i of the integer index is the
/// value of VarId{i}.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n) : bits_(n, 0) {}
  Assignment(std::initializer_list<int> bits);

  static Assignment from_index(std::size_t n, std::uint64_t index);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  Assignment flipped(std::size_t i) const;

  std::uint64_t to_index() const;

  /// "(1,0,0)"
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Parses "101" (bit 0 first) or "(1,0,1)".
Assignment parse_assignment(std::string_view text);

inline constexpr std::uint32_t kDefaultTableCap = 24;

struct EnumerationOptions {
  std::uint32_t cap = kDefaultTableCap;
  unsigned jobs = 1;
};

class TruthTable {
 public:
  TruthTable() : TruthTable(0) {}
  explicit TruthTable(std::uint32_t n);

  std::uint32_t num_inputs() const { return n_; }
  std::uint64_t num_entries() const { return std::uint64_t{1} << n_; }
  bool get(std::uint64_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  void set(std::uint64_t index, bool value);
  std::uint64_t count_ones() const;

  /// Packed entries, 64 per word, entry i at bit (i mod 64) of word i/64.
  /// Bits beyond num_entries() are zero.
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

  /// Two hex characters per 8 entries, bytes in ascending entry order, each
  /// byte LSB-first (entry 8k+j is bit j of byte k).
  std::string to_hex() const;
  static TruthTable from_hex(std::uint32_t n, std::string_view hex);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint64_t> words_;
};

bool evaluate(const Circuit& c, const Assignment& a);

TruthTable truth_table(const Circuit& c, const EnumerationOptions& options = {});

struct MonotonicityResult {
  bool monotone = true;
  /// First (a, a with one bit raised 0→1) where the output drops, in index
  /// order of a then of the raised bit.
  std::optional<std::pair<Assignment, Assignment>> violation;
};

/// Bitwise partial order: t(a) ≤ t(a↗) for every single 0→1 flip.
MonotonicityResult is_monotone(const TruthTable& t);

enum class Verdict { Equivalent, Differs, Inconclusive };

const char* to_string(Verdict v);

struct EquivalenceReport {
  Verdict verdict = Verdict::Equivalent;
  std::optional<Assignment> witness;
  bool lhs_value = false;
  bool rhs_value = false;
  std::uint64_t assignments_checked = 0;
};

struct EquivalenceOptions {
  EnumerationOptions enumeration;
  /// Above the cap, sample instead of failing. Sampling can find a witness
  /// but never certifies equivalence; the verdict is then Inconclusive.
  bool randomized = false;
  std::uint64_t samples = 1u << 16;
  std::uint64_t seed = 0x5eed;
};

/// Exhaustive scan in index order; the witness is the lowest differing index.
EquivalenceReport check_equivalence(const Circuit& a, const Circuit& b,
                                    const EquivalenceOptions& options = {});

}  // namespace monocirc
