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

#include "monocirc/eval.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <thread>

#include "monocirc/error.hpp"

namespace monocirc {

Assignment::Assignment(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("assignment bits must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

Assignment Assignment::from_index(std::size_t n, std::uint64_t index) {
  Assignment a(n);
  for (std::size_t i = 0; i < n && i < 64; ++i) a.bits_[i] = (index >> i) & 1u;
  return a;
}

Assignment Assignment::flipped(std::size_t i) const {
  Assignment a = *this;
  a.bits_[i] ^= 1u;
  return a;
}

std::uint64_t Assignment::to_index() const {
  if (bits_.size() > 64) throw std::out_of_range("assignment too wide for an integer index");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) idx |= std::uint64_t{bits_[i]} << i;
  return idx;
}

std::string Assignment::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i) s += ',';
    s += bits_[i] ? '1' : '0';
  }
  s += ')';
  return s;
}

Assignment parse_assignment(std::string_view text) {
  std::vector<int> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits.push_back(ch - '0');
    } else if (ch != '(' && ch != ')' && ch != ',' && ch != ' ') {
      throw std::invalid_argument("invalid character in assignment: '" + std::string(1, ch) + "'");
    }
  }
  Assignment a(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) a.set(i, bits[i] != 0);
  return a;
}

TruthTable::TruthTable(std::uint32_t n) : n_(n) {
  if (n > 40) throw CapExceeded("truth table inputs", n, 40);
  const std::uint64_t entries = std::uint64_t{1} << n;
  words_.assign(static_cast<std::size_t>((entries + 63) / 64), 0);
}

void TruthTable::set(std::uint64_t index, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (index & 63);
  if (value) {
    words_[index >> 6] |= mask;
  } else {
    words_[index >> 6] &= ~mask;
  }
}

std::uint64_t TruthTable::count_ones() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::string TruthTable::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t bytes = std::max<std::uint64_t>(1, num_entries() / 8);
  std::string out;
  out.reserve(bytes * 2);
  for (std::uint64_t k = 0; k < bytes; ++k) {
    const auto byte = static_cast<unsigned>((words_[k / 8] >> ((k % 8) * 8)) & 0xffu);
    out += kDigits[byte >> 4];
    out += kDigits[byte & 0xf];
  }
  return out;
}

TruthTable TruthTable::from_hex(std::uint32_t n, std::string_view hex) {
  TruthTable t(n);
  const std::uint64_t bytes = std::max<std::uint64_t>(1, t.num_entries() / 8);
  if (hex.size() != bytes * 2) {
    throw std::invalid_argument("hex table for " + std::to_string(n) + " inputs needs " +
                                std::to_string(bytes * 2) + " characters");
  }
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw std::invalid_argument("invalid hex digit");
  };
  for (std::uint64_t k = 0; k < bytes; ++k) {
    const std::uint64_t byte = nibble(hex[2 * k]) << 4 | nibble(hex[2 * k + 1]);
    t.words_[k / 8] |= byte << ((k % 8) * 8);
  }
  if (t.num_entries() < 8) {
    const std::uint64_t mask = (std::uint64_t{1} << t.num_entries()) - 1;
    if (t.words_[0] & ~mask) throw std::invalid_argument("hex table has bits beyond its entries");
  }
  return t;
}

bool evaluate(const Circuit& c, const Assignment& a) {
  if (a.size() != c.input_arity()) throw ArityMismatch(c.input_arity(), a.size());
  const auto nodes = c.nodes();
  const std::size_t last = c.output().index;
  std::vector<std::uint8_t> value(last + 1);
  for (std::size_t i = 0; i <= last; ++i) {
    const Node& n = nodes[i];
    switch (n.kind()) {
      case NodeKind::Const:
        value[i] = n.value();
        break;
      case NodeKind::Input:
        value[i] = a[n.var().index];
        break;
      case NodeKind::Not:
        value[i] = !value[n.child().index];
        break;
      case NodeKind::And:
        value[i] = value[n.left().index] & value[n.right().index];
        break;
      case NodeKind::Or:
        value[i] = value[n.left().index] | value[n.right().index];
        break;
    }
  }
  return value[last] != 0;
}

namespace {

// Word w holds entries [64w, 64w+64). For VarId < 6 the pattern repeats
// within a word; above that the whole word is constant.
constexpr std::uint64_t kLowVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void fill_words(const Circuit& c, const std::vector<NodeRef>& order, std::size_t first,
                std::size_t last, std::uint64_t valid_mask, std::vector<std::uint64_t>& out) {
  std::vector<std::uint64_t> value(c.size());
  for (std::size_t w = first; w < last; ++w) {
    for (NodeRef r : order) {
      const Node& n = c.node(r);
      std::uint64_t v = 0;
      switch (n.kind()) {
        case NodeKind::Const:
          v = n.value() ? ~std::uint64_t{0} : 0;
          break;
        case NodeKind::Input: {
          const std::uint32_t var = n.var().index;
          if (var < 6) {
            v = kLowVarPattern[var];
          } else {
            v = ((w >> (var - 6)) & 1u) ? ~std::uint64_t{0} : 0;
          }
          break;
        }
        case NodeKind::Not:
          v = ~value[n.child().index];
          break;
        case NodeKind::And:
          v = value[n.left().index] & value[n.right().index];
          break;
        case NodeKind::Or:
          v = value[n.left().index] | value[n.right().index];
          break;
      }
      value[r.index] = v;
    }
    out[w] = value[c.output().index] & valid_mask;
  }
}

}  // namespace

TruthTable truth_table(const Circuit& c, const EnumerationOptions& options) {
  const std::uint32_t n = c.input_arity();
  if (n > options.cap) throw CapExceeded("truth table inputs", n, options.cap);
  TruthTable t(n);
  const std::vector<NodeRef> order = c.reachable();
  auto& words = t.mutable_words();
  const std::uint64_t mask =
      t.num_entries() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t.num_entries()) - 1;
  const std::size_t total = words.size();
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));
  if (jobs == 1) {
    fill_words(c, order, 0, total, mask, words);
    return t;
  }
  // Each worker owns a disjoint range of words.
  std::vector<std::thread> workers;
  const std::size_t chunk = (total + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t lo = std::min(total, j * chunk);
    const std::size_t hi = std::min(total, lo + chunk);
    if (lo == hi) break;
    workers.emplace_back([&, lo, hi] { fill_words(c, order, lo, hi, mask, words); });
  }
  for (auto& w : workers) w.join();
  return t;
}

MonotonicityResult is_monotone(const TruthTable& t) {
  const std::uint32_t n = t.num_inputs();
  for (std::uint64_t a = 0; a < t.num_entries(); ++a) {
    if (!t.get(a)) continue;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (a & bit) continue;
      if (!t.get(a | bit)) {
        return {false, std::make_pair(Assignment::from_index(n, a), Assignment::from_index(n, a | bit))};
      }
    }
  }
  return {};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return "EQUIVALENT";
    case Verdict::Differs:
      return "DIFFERS";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

EquivalenceReport check_equivalence(const Circuit& a, const Circuit& b,
                                    const EquivalenceOptions& options) {
  if (a.input_arity() != b.input_arity()) throw ArityMismatch(a.input_arity(), b.input_arity());
  const std::uint32_t n = a.input_arity();
  EquivalenceReport report;
  if (n <= options.enumeration.cap) {
    const TruthTable ta = truth_table(a, options.enumeration);
    const TruthTable tb = truth_table(b, options.enumeration);
    const auto& wa = ta.words();
    const auto& wb = tb.words();
    for (std::size_t w = 0; w < wa.size(); ++w) {
      const std::uint64_t diff = wa[w] ^ wb[w];
      if (diff == 0) continue;
      const std::uint64_t index = w * 64 + static_cast<std::uint64_t>(std::countr_zero(diff));
      report.verdict = Verdict::Differs;
      report.witness = Assignment::from_index(n, index);
      report.lhs_value = ta.get(index);
      report.rhs_value = tb.get(index);
      report.assignments_checked = index + 1;
      return report;
    }
    report.assignments_checked = ta.num_entries();
    return report;
  }
  if (!options.randomized) throw CapExceeded("exhaustive equivalence inputs", n, options.enumeration.cap);

  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  Assignment x(n);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    for (std::uint32_t i = 0; i < n; ++i) x.set(i, coin(rng));
    const bool va = evaluate(a, x);
    const bool vb = evaluate(b, x);
    if (va != vb) {
      report.verdict = Verdict::Differs;
      report.witness = x;
      report.lhs_value = va;
      report.rhs_value = vb;
      report.assignments_checked = s + 1;
      return report;
    }
  }
  report.verdict = Verdict::Inconclusive;
  report.assignments_checked = options.samples;
  return report;
}

}  // namespace monocirc
