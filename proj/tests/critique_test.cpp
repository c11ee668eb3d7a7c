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

#include <gtest/gtest.h>

#include "monocirc/critique.hpp"
#include "monocirc/error.hpp"
#include "monocirc/formula.hpp"
#include "support/generators.hpp"

using namespace monocirc;

namespace {

ExtractedForm extraction(const DualRailCircuit& d, std::uint32_t pivot) {
  return extract_negated(sop_expand(d), pivot);
}

DualRailCircuit rails_of(const Circuit& c) { return split_negations(to_standard_form(c)); }

// CLIQUE(4,3) ∨ (¬e(0,1) ∧ e(1,2) ∧ e(1,3) ∧ e(2,3)).
Circuit triangle_implied_clique_4_3() {
  const CliqueParams p(4, 3);
  CircuitBuilder b(p.num_edges());
  const NodeRef clique = build_clique_into(b, p);
  std::vector<NodeRef> lits{b.make_not(b.input(edge_index(0, 1, 4))), b.input(edge_index(1, 2, 4)),
                            b.input(edge_index(1, 3, 4)), b.input(edge_index(2, 3, 4))};
  const NodeRef out = b.make_or(clique, b.make_and(lits));
  return std::move(b).finish(out);
}

}  // namespace

TEST(build_f_prime, three_three) {
  const CliqueParams p(3, 3);
  const Circuit f = build_f_prime(p);
  EXPECT_EQ(print_formula(f), "x0 & !x0 | x0 & x1 & x2");
  EXPECT_EQ(check_equivalence(f, build_clique(p)).verdict, Verdict::Equivalent);
}

TEST(build_f_prime, four_three_is_equivalent_over_all_64_assignments) {
  const CliqueParams p(4, 3);
  const Circuit f = build_f_prime(p);
  EXPECT_EQ(f.input_arity(), 6u);
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const Assignment a = Assignment::from_index(6, idx);
    EXPECT_EQ(evaluate(f, a), clique_oracle(p, a));
  }
}

TEST(build_f_prime, requires_s_at_least_three) {
  EXPECT_THROW(build_f_prime(CliqueParams(3, 2)), std::invalid_argument);
}

TEST(run_counterexample, three_three) {
  const CounterexampleReport r = run_counterexample(CliqueParams(3, 3));
  EXPECT_EQ(r.equiv_before.verdict, Verdict::Equivalent);
  ASSERT_EQ(r.equiv_after.verdict, Verdict::Differs);
  EXPECT_EQ(*r.witness, (Assignment{1, 0, 0}));
  EXPECT_TRUE(r.equiv_after.lhs_value);
  EXPECT_FALSE(r.equiv_after.rhs_value);
  EXPECT_TRUE(r.single_edge_f_double_prime);
  EXPECT_FALSE(r.single_edge_oracle);
  EXPECT_TRUE(r.refuted());
  EXPECT_EQ(gate_stats(r.f_double_prime).not_count, 0u);
}

TEST(run_counterexample, witness_is_single_edge_for_larger_graphs) {
  for (std::uint32_t m = 3; m <= 6; ++m) {
    const CliqueParams p(m, 3);
    const CounterexampleReport r = run_counterexample(p);
    EXPECT_TRUE(r.refuted()) << "m=" << m;
    // Lowest index disagreement is edge (0,1) alone: index 1.
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->to_index(), 1u);
    EXPECT_EQ(r.single_edge, edges_assignment(p, {{0, 1}}));
    EXPECT_TRUE(is_monotone(truth_table(r.f_double_prime)).monotone);
  }
}

TEST(run_counterexample, larger_cliques_are_refuted_too) {
  const CounterexampleReport r = run_counterexample(CliqueParams(5, 4));
  EXPECT_TRUE(r.refuted());
}

TEST(run_counterexample, cap) {
  CritiqueOptions opts;
  opts.enumeration.cap = 5;
  EXPECT_THROW(run_counterexample(CliqueParams(4, 3), opts), CapExceeded);
}

TEST(check_claim1, vacuous_on_appended_contradiction) {
  const CliqueParams p(3, 3);
  const DualRailCircuit f = rails_of(build_f_prime(p));
  const Claim1Result r = check_claim1(f, extraction(f, 0), p);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.vacuous());
}

TEST(check_claim1, holds_non_vacuously_with_triangle_implied_term) {
  const CliqueParams p(4, 3);
  const DualRailCircuit f = rails_of(triangle_implied_clique_4_3());
  const ExtractedForm e = extraction(f, edge_index(0, 1, 4).index);
  EXPECT_EQ(e.term_a.products(), (std::vector<Product>{{3, 4, 5}}));
  const Claim1Result r = check_claim1(f, e, p);
  EXPECT_TRUE(r.holds);
  // e(0,1)=0 and e(1,2)=e(1,3)=e(2,3)=1 leaves e(0,2), e(0,3) free.
  EXPECT_EQ(r.premises, 4u);
}

TEST(check_claim1, holds_for_every_pivot_on_augmented_cliques) {
  gen::Rng rng(51);
  for (int i = 0; i < 10; ++i) {
    const CliqueParams p(4, gen::uniform(rng, 2, 4));
    const DualRailCircuit f = rails_of(gen::random_augmented_clique(rng, p, 3));
    const SopFormula s = sop_expand(f);
    for (std::uint32_t v = 0; v < p.num_edges(); ++v) {
      EXPECT_TRUE(check_claim1(f, extract_negated(s, v), p).holds);
    }
  }
}

TEST(check_claim1, rejects_non_clique_circuit) {
  const CliqueParams p(3, 3);
  const DualRailCircuit parity = rails_of(parse_formula("x0 & !x1 & !x2 | !x0 & x1 & !x2 | !x0 & !x1 & x2 | x0 & x1 & x2"));
  EXPECT_THROW(check_claim1(parity, extraction(parity, 0), p), HypothesisViolated);
}

TEST(check_claim1, argument_errors) {
  const CliqueParams p(3, 3);
  const DualRailCircuit f = rails_of(build_f_prime(p));
  EXPECT_THROW(check_claim1(f, extraction(f, 0), CliqueParams(4, 3)), ArityMismatch);
  EXPECT_THROW(check_claim1(f, extract_negated(SopFormula(4), 0), p), ArityMismatch);
}

TEST(check_set_gap, appended_contradiction_leaves_four_uncovered) {
  const CliqueParams p(3, 3);
  const SopFormula s = sop_expand(rails_of(build_f_prime(p)));
  const SetGapReport r = check_set_gap(s, edge_index(0, 1, 3).index);
  EXPECT_TRUE(r.covered.empty());
  EXPECT_EQ(r.term_a_true.size(), 4u);
  EXPECT_EQ(r.gap.size(), 4u);
  for (const auto& a : r.gap) EXPECT_TRUE(a[0]);
}

TEST(check_set_gap, monotone_formula_has_no_gap) {
  const SopFormula s = sop_expand(split_negations(build_clique(CliqueParams(4, 3))));
  for (std::uint32_t v = 0; v < 6; ++v) {
    const SetGapReport r = check_set_gap(s, v);
    EXPECT_TRUE(r.covered.empty());
    EXPECT_TRUE(r.term_a_true.empty());
    EXPECT_TRUE(r.gap.empty());
  }
}

TEST(check_set_gap, single_negated_literal_is_fully_covered) {
  // f = ¬x0: term_a is the empty product. Enumerating n = 1 by hand: both
  // assignments have term_a = 1; (0) is covered directly and (1) through (0).
  const SetGapReport r = check_set_gap(SopFormula(2, {Product{1}}), 0);
  EXPECT_EQ(r.term_a_true.size(), 2u);
  EXPECT_EQ(r.covered.size(), 2u);
  EXPECT_TRUE(r.gap.empty());
}

TEST(check_set_gap, gap_positive_for_f_prime_family) {
  for (std::uint32_t m = 3; m <= 5; ++m) {
    const SopFormula s = sop_expand(rails_of(build_f_prime(CliqueParams(m, 3))));
    const SetGapReport r = check_set_gap(s, 0);
    EXPECT_TRUE(r.covered.empty());
    // Every assignment with edge (0,1) present.
    EXPECT_EQ(r.gap.size(), std::size_t{1} << (CliqueParams(m, 3).num_edges() - 1));
  }
}
