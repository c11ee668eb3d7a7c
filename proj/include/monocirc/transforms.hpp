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

// Rewriting pipeline: standard form, dual-rail splitting, sum-of-products
// expansion, extraction of a negated variable and the replace-by-1 steps.
//
// Rail convention for a circuit over n variables: rail v < n is x_v and rail
// n+v is ¬x_v. An assignment to the 2n rails is valid when rail n+v is the
// complement of rail v for every v.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "monocirc/circuit.hpp"
#include "monocirc/eval.hpp"

namespace monocirc {

/// Computes both polarities of every node by De Morgan duality and keeps the
/// positive one of the output. Not gates remain only directly above inputs.
Circuit to_standard_form(const Circuit& c);

bool is_standard_form(const Circuit& c);

class DualRailCircuit {
 public:
  /// Throws std::invalid_argument unless `inner` is Not-free over 2n inputs.
  DualRailCircuit(Circuit inner, std::uint32_t n);

  const Circuit& inner() const { return inner_; }
  std::uint32_t num_vars() const { return n_; }

 private:
  Circuit inner_;
  std::uint32_t n_;
};

/// Rail index of ¬x_v.
inline std::uint32_t negative_rail(std::uint32_t n, std::uint32_t v) { return n + v; }

/// Requires standard form; each Not(Input(v)) becomes Input(n+v).
DualRailCircuit split_negations(const Circuit& standard);

/// Extends `a` to 2n rails by rail n+v = ¬a[v].
Assignment extend_to_rails(const Assignment& a);

bool eval_dual_rail(const DualRailCircuit& d, const Assignment& a);

/// Sorted, duplicate-free set of rail indices. A product may contain both
/// rails of a variable; such contradictions are kept.
class Product {
 public:
  Product() = default;
  Product(std::initializer_list<std::uint32_t> rails);
  explicit Product(std::vector<std::uint32_t> rails);

  const std::vector<std::uint32_t>& rails() const { return rails_; }
  bool empty() const { return rails_.empty(); }
  bool contains(std::uint32_t rail) const;
  Product without(std::uint32_t rail) const;
  Product merged(const Product& other) const;

  friend auto operator<=>(const Product&, const Product&) = default;
  friend bool operator==(const Product&, const Product&) = default;

 private:
  std::vector<std::uint32_t> rails_;
};

/// Sum of products over `input_arity` rails. No products is constant 0; an
/// empty product is constant 1. Products are kept sorted and unique.
class SopFormula {
 public:
  explicit SopFormula(std::uint32_t input_arity, std::vector<Product> products = {});

  std::uint32_t input_arity() const { return input_arity_; }
  const std::vector<Product>& products() const { return products_; }
  bool is_constant_zero() const { return products_.empty(); }

  bool evaluate(const Assignment& rails) const;

  friend bool operator==(const SopFormula&, const SopFormula&) = default;

 private:
  std::uint32_t input_arity_;
  std::vector<Product> products_;
};

/// Left-associated OR of left-associated ANDs over the SOP's rails.
Circuit sop_to_circuit(const SopFormula& s);

inline constexpr std::uint64_t kDefaultSopCap = 1'000'000;

/// Distributes AND over OR bottom-up. Throws CapExceeded when any
/// intermediate product count would exceed `cap`.
SopFormula sop_expand(const DualRailCircuit& d, std::uint64_t cap = kDefaultSopCap);

/// (¬x_pivot ∧ term_a) ∨ rest, with rail n+pivot absent from both parts.
struct ExtractedForm {
  std::uint32_t pivot = 0;
  SopFormula term_a;
  SopFormula rest;

  std::uint32_t num_vars() const { return term_a.input_arity() / 2; }
};

/// `s` must be over an even number of rails (2n).
ExtractedForm extract_negated(const SopFormula& s, std::uint32_t pivot);

/// Circuit over the 2n rails denoting the extracted form.
Circuit extracted_to_circuit(const ExtractedForm& e);

/// Sets ¬x_pivot := 1: term_a ∪ rest.
SopFormula sima_replace_one(const ExtractedForm& e);

/// Applies extraction and replacement for every variable in ascending order
/// and re-materializes the result over the n positive rails. The output is
/// always Not-free; it need not compute the same function.
SopFormula sima_replace_all(const SopFormula& s);
Circuit sima_full_procedure(const DualRailCircuit& d, std::uint64_t sop_cap = kDefaultSopCap);

/// Drops the (absent) negative rails of an SOP that mentions only rails < n.
Circuit positive_rails_to_circuit(const SopFormula& s);

/// Text format:
///   SOP <rails> <products>
///   one line per product, space-separated rail ids (empty line = empty product)
std::string serialize(const SopFormula& s);
SopFormula deserialize_sop(std::string_view text);

/// EXTRACT <pivot>, then the TERM_A and REST formulas in SOP format.
std::string serialize(const ExtractedForm& e);

}  // namespace monocirc
