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

// Executable checks of the negated-variable replacement argument for clique
// circuits: the appended-contradiction counterexample, the restricted claim
// that does hold, and the set-level gap between the two.

#include <cstdint>
#include <optional>
#include <vector>

#include "monocirc/clique.hpp"
#include "monocirc/eval.hpp"
#include "monocirc/transforms.hpp"

namespace monocirc {

struct CritiqueOptions {
  EnumerationOptions enumeration;
  std::uint64_t sop_cap = kDefaultSopCap;
  std::uint64_t clique_budget = kDefaultCliqueBudget;
};

/// (x0 ∧ ¬x0) ∨ CLIQUE(m,s). Requires s ≥ 3.
Circuit build_f_prime(const CliqueParams& p, std::uint64_t clique_budget = kDefaultCliqueBudget);

struct CounterexampleReport {
  CliqueParams params;
  Circuit clique;
  Circuit f_prime;
  Circuit f_standard;
  DualRailCircuit f_rails;
  Circuit f_double_prime;
  EquivalenceReport equiv_before;  // f' vs CLIQUE
  EquivalenceReport equiv_after;   // f'' vs CLIQUE
  /// Lowest-index disagreement from equiv_after, if any.
  std::optional<Assignment> witness;
  /// Only edge (0,1) present.
  Assignment single_edge;
  bool single_edge_f_double_prime = false;
  bool single_edge_oracle = false;

  bool refuted() const {
    return equiv_before.verdict == Verdict::Equivalent && equiv_after.verdict == Verdict::Differs &&
           single_edge_f_double_prime != single_edge_oracle;
  }
};

/// f' → standard form → rails → replace every negated variable by 1 → f''.
CounterexampleReport run_counterexample(const CliqueParams& p, const CritiqueOptions& options = {});

struct Claim1Result {
  bool holds = true;
  /// Valid assignments A with ¬x_pivot(A) = 1 and term_a(A) = 1.
  std::uint64_t premises = 0;
  std::optional<Assignment> violation;

  bool vacuous() const { return holds && premises == 0; }
};

/// For every valid A where both ¬x_pivot and term_a are 1, checks f(A) = 1 and
/// f(A') = 1, A' being A with x_pivot flipped. Throws HypothesisViolated
/// unless f computes CLIQUE(p) on every valid assignment.
Claim1Result check_claim1(const DualRailCircuit& f, const ExtractedForm& e, const CliqueParams& p,
                          const EnumerationOptions& enumeration = {});

struct SetGapReport {
  std::uint32_t pivot = 0;
  /// Valid A with term_a(A) = ¬x_pivot(A) = 1, or the same for A'.
  std::vector<Assignment> covered;
  /// Valid A with term_a(A) = 1.
  std::vector<Assignment> term_a_true;
  /// term_a_true minus covered.
  std::vector<Assignment> gap;
};

/// Enumerates valid assignments of the n variables of `s` (2n rails).
SetGapReport check_set_gap(const SopFormula& s, std::uint32_t pivot,
                           const EnumerationOptions& enumeration = {});

}  // namespace monocirc
