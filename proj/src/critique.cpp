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

#include "monocirc/critique.hpp"

#include <stdexcept>
#include <string>

#include "monocirc/error.hpp"

namespace monocirc {

Circuit build_f_prime(const CliqueParams& p, std::uint64_t clique_budget) {
  if (p.s() < 3) {
    throw std::invalid_argument("build_f_prime: needs s >= 3, got s=" + std::to_string(p.s()));
  }
  CircuitBuilder b(p.num_edges());
  const NodeRef x0 = b.input(VarId{0});
  const NodeRef contradiction = b.make_and(x0, b.make_not(x0));
  const NodeRef clique = build_clique_into(b, p, clique_budget);
  const NodeRef out = b.make_or(contradiction, clique);
  return std::move(b).finish(out);
}

CounterexampleReport run_counterexample(const CliqueParams& p, const CritiqueOptions& options) {
  if (p.num_edges() > options.enumeration.cap) {
    throw CapExceeded("counterexample edge variables", p.num_edges(), options.enumeration.cap);
  }
  Circuit clique = build_clique(p, {Sharing::On, options.clique_budget});
  Circuit f_prime = build_f_prime(p, options.clique_budget);
  Circuit f_standard = to_standard_form(f_prime);
  DualRailCircuit rails = split_negations(f_standard);
  Circuit f_double_prime = sima_full_procedure(rails, options.sop_cap);

  EquivalenceOptions eq;
  eq.enumeration = options.enumeration;
  EquivalenceReport before = check_equivalence(f_prime, clique, eq);
  EquivalenceReport after = check_equivalence(f_double_prime, clique, eq);

  Assignment single_edge = edges_assignment(p, {{0, 1}});
  const bool fdp = evaluate(f_double_prime, single_edge);
  const bool oracle = clique_oracle(p, single_edge);
  std::optional<Assignment> witness = after.witness;
  return CounterexampleReport{p,
                              std::move(clique),
                              std::move(f_prime),
                              std::move(f_standard),
                              std::move(rails),
                              std::move(f_double_prime),
                              std::move(before),
                              std::move(after),
                              std::move(witness),
                              std::move(single_edge),
                              fdp,
                              oracle};
}

Claim1Result check_claim1(const DualRailCircuit& f, const ExtractedForm& e, const CliqueParams& p,
                          const EnumerationOptions& enumeration) {
  const std::uint32_t n = f.num_vars();
  if (n != p.num_edges()) throw ArityMismatch(p.num_edges(), n);
  if (e.term_a.input_arity() != 2 * n) throw ArityMismatch(2 * n, e.term_a.input_arity());
  if (e.pivot >= n) throw std::out_of_range("pivot out of range");
  if (n > enumeration.cap) throw CapExceeded("claim check variables", n, enumeration.cap);

  // Truth table of f over valid assignments, checked against the oracle.
  const std::uint64_t total = std::uint64_t{1} << n;
  TruthTable f_table(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Assignment a = Assignment::from_index(n, idx);
    const bool value = eval_dual_rail(f, a);
    if (value != clique_oracle(p, a)) {
      throw HypothesisViolated("check_claim1: circuit differs from CLIQUE(" + std::to_string(p.m()) +
                               "," + std::to_string(p.s()) + ") at " + a.to_string());
    }
    f_table.set(idx, value);
  }

  Claim1Result result;
  const std::uint64_t pivot_bit = std::uint64_t{1} << e.pivot;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (idx & pivot_bit) continue;  // ¬x_pivot must be 1
    const Assignment a = Assignment::from_index(n, idx);
    if (!e.term_a.evaluate(extend_to_rails(a))) continue;
    ++result.premises;
    if (!f_table.get(idx) || !f_table.get(idx | pivot_bit)) {
      result.holds = false;
      result.violation = a;
      return result;
    }
  }
  return result;
}

SetGapReport check_set_gap(const SopFormula& s, std::uint32_t pivot, const EnumerationOptions& enumeration) {
  const ExtractedForm e = extract_negated(s, pivot);
  const std::uint32_t n = e.num_vars();
  if (n > enumeration.cap) throw CapExceeded("set gap variables", n, enumeration.cap);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t pivot_bit = std::uint64_t{1} << pivot;

  // both[idx]: term_a and ¬x_pivot are 1 at idx.
  std::vector<char> term_a(total);
  std::vector<char> both(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    term_a[idx] = e.term_a.evaluate(extend_to_rails(Assignment::from_index(n, idx)));
    both[idx] = term_a[idx] && !(idx & pivot_bit);
  }
  SetGapReport report;
  report.pivot = pivot;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const bool covered = both[idx] || both[idx ^ pivot_bit];
    if (covered) report.covered.push_back(Assignment::from_index(n, idx));
    if (term_a[idx]) {
      report.term_a_true.push_back(Assignment::from_index(n, idx));
      if (!covered) report.gap.push_back(Assignment::from_index(n, idx));
    }
  }
  return report;
}

}  // namespace monocirc
