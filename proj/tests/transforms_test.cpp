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

#include "monocirc/clique.hpp"
#include "monocirc/critique.hpp"
#include "monocirc/error.hpp"
#include "monocirc/eval.hpp"
#include "monocirc/formula.hpp"
#include "monocirc/transforms.hpp"
#include "support/generators.hpp"

using namespace monocirc;

namespace {

SopFormula sop(std::uint32_t rails, std::vector<Product> products) {
  return SopFormula(rails, std::move(products));
}

// f'(3,3) in rail form: p0 & q0 | p0 & p1 & p2 with q0 = rail 3.
SopFormula f_prime_3_3_sop() { return sop(6, {{0, 3}, {0, 1, 2}}); }

// All 2n-rail assignments.
template <typename F>
void for_all_rail_assignments(std::uint32_t rails, F&& f) {
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << rails); ++idx) f(Assignment::from_index(rails, idx));
}

}  // namespace

TEST(to_standard_form, de_morgan_examples) {
  EXPECT_EQ(print_formula(to_standard_form(parse_formula("!(x0 & x1)"))), "!x0 | !x1");
  EXPECT_EQ(print_formula(to_standard_form(parse_formula("!!x0"))), "x0");
  EXPECT_EQ(print_formula(to_standard_form(parse_formula("!(x0 | !x1)"))), "!x0 & x1");
  EXPECT_EQ(print_formula(to_standard_form(parse_formula("!(x0 & !1)"))), "!x0 | 1");
}

TEST(to_standard_form, contract_on_random_circuits) {
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = gen::uniform(rng, 0, 10);
    const Circuit c = gen::random_circuit(rng, n, gen::uniform(rng, 1, 30), true);
    const Circuit s = to_standard_form(c);
    EXPECT_TRUE(is_standard_form(s));
    EXPECT_EQ(truth_table(s), truth_table(c));
    EXPECT_LE(gate_stats(s).total(), 2 * gate_stats(c).total() + n);
  }
}

TEST(is_standard_form, detects_inner_negation) {
  EXPECT_TRUE(is_standard_form(parse_formula("!x0 & x1")));
  EXPECT_FALSE(is_standard_form(parse_formula("!(x0 & x1)")));
  EXPECT_FALSE(is_standard_form(parse_formula("INPUTS 1; !1")));
}

TEST(split_negations, renames_negated_inputs_to_rails) {
  const DualRailCircuit d = split_negations(parse_formula("!x0 | x1"));
  EXPECT_EQ(d.num_vars(), 2u);
  EXPECT_EQ(d.inner().input_arity(), 4u);
  EXPECT_EQ(print_formula(d.inner()), "INPUTS 4; x2 | x1");

  const DualRailCircuit m = split_negations(parse_formula("x0 & x1 | x2"));
  EXPECT_EQ(m.inner().input_arity(), 6u);
  EXPECT_EQ(print_formula(m.inner()), "INPUTS 6; x0 & x1 | x2");

  const DualRailCircuit contra = split_negations(parse_formula("x0 & !x0"));
  EXPECT_EQ(print_formula(contra.inner()), "x0 & x1");
}

TEST(split_negations, requires_standard_form) {
  EXPECT_THROW(split_negations(parse_formula("!(x0 | x1)")), std::invalid_argument);
}

TEST(dual_rail_circuit, rejects_not_gates_and_bad_arity) {
  EXPECT_THROW(DualRailCircuit(parse_formula("!x0 | x1"), 1), std::invalid_argument);
  EXPECT_THROW(DualRailCircuit(parse_formula("x0 | x2"), 1), ArityMismatch);
}

TEST(eval_dual_rail, examples) {
  const DualRailCircuit contra(parse_formula("x0 & x1"), 1);
  EXPECT_FALSE(eval_dual_rail(contra, {0}));
  EXPECT_FALSE(eval_dual_rail(contra, {1}));
  const DualRailCircuit d(parse_formula("INPUTS 4; x2 | x1"), 2);
  EXPECT_TRUE(eval_dual_rail(d, {0, 0}));
  EXPECT_FALSE(eval_dual_rail(d, {1, 0}));
  EXPECT_THROW(eval_dual_rail(d, {1}), ArityMismatch);
}

TEST(split_negations, agrees_on_valid_assignments) {
  gen::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t n = gen::uniform(rng, 1, 10);
    const Circuit c = gen::random_circuit(rng, n, 25, true);
    const DualRailCircuit d = split_negations(to_standard_form(c));
    EXPECT_EQ(gate_stats(d.inner()).not_count, 0u);
    const TruthTable t = truth_table(c);
    for (std::uint64_t idx = 0; idx < t.num_entries(); ++idx) {
      ASSERT_EQ(eval_dual_rail(d, Assignment::from_index(n, idx)), t.get(idx));
    }
  }
}

TEST(product, set_semantics) {
  const Product p{3, 0, 3};
  EXPECT_EQ(p.rails(), (std::vector<std::uint32_t>{0, 3}));
  EXPECT_TRUE(p.contains(3));
  EXPECT_EQ(p.without(3), (Product{0}));
  EXPECT_EQ(p.merged(Product{1, 3}), (Product{0, 1, 3}));
}

TEST(sop_formula, constants_and_validation) {
  const SopFormula zero(2);
  EXPECT_TRUE(zero.is_constant_zero());
  EXPECT_FALSE(zero.evaluate({1, 1}));
  const SopFormula one(2, {Product{}});
  EXPECT_TRUE(one.evaluate({0, 0}));
  EXPECT_THROW(SopFormula(2, {Product{2}}), std::out_of_range);
  EXPECT_EQ(sop(4, {{1}, {0}, {1}}).products(), (std::vector<Product>{{0}, {1}}));
}

TEST(sop_expand, distributes_and_over_or) {
  const DualRailCircuit d(parse_formula("INPUTS 4; (x0 | x1) & x2"), 2);
  EXPECT_EQ(sop_expand(d), sop(4, {{0, 2}, {1, 2}}));
}

TEST(sop_expand, keeps_contradictory_products) {
  const CliqueParams p(3, 3);
  const DualRailCircuit d = split_negations(to_standard_form(build_f_prime(p)));
  EXPECT_EQ(sop_expand(d), f_prime_3_3_sop());
}

TEST(sop_expand, single_input_and_constants) {
  EXPECT_EQ(sop_expand(DualRailCircuit(parse_formula("INPUTS 2; x0"), 1)), sop(2, {{0}}));
  EXPECT_EQ(sop_expand(DualRailCircuit(parse_formula("INPUTS 2; 0"), 1)), sop(2, {}));
  EXPECT_EQ(sop_expand(DualRailCircuit(parse_formula("INPUTS 2; 1"), 1)), sop(2, {Product{}}));
  EXPECT_EQ(sop_expand(DualRailCircuit(parse_formula("x0 & x0 | x1 & x1"), 1)), sop(2, {{0}, {1}}));
}

TEST(sop_expand, cap) {
  // (x0|x1)&(x2|x3)&(x4|x5) expands to 8 products.
  const DualRailCircuit d(parse_formula("(x0 | x1) & (x2 | x3) & (x4 | x5)"), 3);
  EXPECT_THROW(sop_expand(d, 7), CapExceeded);
  EXPECT_EQ(sop_expand(d, 8).products().size(), 8u);
}

TEST(sop_expand, function_equal_on_all_rail_assignments) {
  gen::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = gen::uniform(rng, 1, 8);
    const DualRailCircuit d = split_negations(to_standard_form(gen::random_circuit(rng, n, 20, true)));
    const SopFormula s = sop_expand(d);
    EXPECT_EQ(truth_table(sop_to_circuit(s)), truth_table(d.inner()));
    EXPECT_TRUE(std::is_sorted(s.products().begin(), s.products().end()));
  }
}

TEST(extract_negated, examples) {
  ExtractedForm e = extract_negated(f_prime_3_3_sop(), 0);
  EXPECT_EQ(e.term_a, sop(6, {{0}}));
  EXPECT_EQ(e.rest, sop(6, {{0, 1, 2}}));

  e = extract_negated(sop(6, {{0, 1}}), 0);
  EXPECT_TRUE(e.term_a.is_constant_zero());
  EXPECT_EQ(e.rest, sop(6, {{0, 1}}));

  e = extract_negated(sop(2, {{1}}), 0);
  EXPECT_EQ(e.term_a, sop(2, {Product{}}));
  EXPECT_TRUE(e.rest.is_constant_zero());
}

TEST(extract_negated, errors) {
  EXPECT_THROW(extract_negated(sop(3, {}), 0), std::invalid_argument);
  EXPECT_THROW(extract_negated(sop(4, {}), 2), std::out_of_range);
}

TEST(extract_negated, reconstruction_identity) {
  gen::Rng rng(44);
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t n = gen::uniform(rng, 1, 8);
    const SopFormula s = gen::random_sop(rng, n);
    const std::uint32_t pivot = gen::uniform(rng, 0, n - 1);
    const ExtractedForm e = extract_negated(s, pivot);
    const std::uint32_t rail = negative_rail(n, pivot);
    for (const auto& p : e.term_a.products()) EXPECT_FALSE(p.contains(rail));
    for (const auto& p : e.rest.products()) EXPECT_FALSE(p.contains(rail));
    EXPECT_EQ(truth_table(extracted_to_circuit(e)), truth_table(sop_to_circuit(s)));
  }
}

TEST(sima_replace_one, examples) {
  ExtractedForm e{0, sop(6, {{0}}), sop(6, {{0, 1, 2}})};
  EXPECT_EQ(sima_replace_one(e), sop(6, {{0}, {0, 1, 2}}));

  const SopFormula rest = sop(6, {{1, 2}, {4}});
  EXPECT_EQ(sima_replace_one(ExtractedForm{1, sop(6, {}), rest}), rest);

  const SopFormula one = sima_replace_one(ExtractedForm{0, sop(2, {Product{}}), sop(2, {})});
  EXPECT_EQ(one, sop(2, {Product{}}));
}

TEST(sima_replace_one, removes_pivot_rail) {
  gen::Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = gen::uniform(rng, 1, 6);
    const std::uint32_t pivot = gen::uniform(rng, 0, n - 1);
    const SopFormula out = sima_replace_one(extract_negated(gen::random_sop(rng, n), pivot));
    for (const auto& p : out.products()) EXPECT_FALSE(p.contains(negative_rail(n, pivot)));
  }
}

TEST(sima_replace_one, value_unchanged_where_term_a_is_zero) {
  gen::Rng rng(46);
  for (int i = 0; i < 500; ++i) {
    const std::uint32_t n = gen::uniform(rng, 1, 6);
    const SopFormula s = gen::random_sop(rng, n);
    const ExtractedForm e = extract_negated(s, gen::uniform(rng, 0, n - 1));
    const SopFormula replaced = sima_replace_one(e);
    for_all_rail_assignments(2 * n, [&](const Assignment& a) {
      if (!e.term_a.evaluate(a)) ASSERT_EQ(replaced.evaluate(a), s.evaluate(a));
    });
  }
}

TEST(sima_full_procedure, examples) {
  const Circuit monotone = parse_formula("x0 & x1 | x2 & (x0 | x1)");
  const Circuit out = sima_full_procedure(split_negations(monotone));
  EXPECT_EQ(check_equivalence(out, monotone).verdict, Verdict::Equivalent);

  const CliqueParams p(3, 3);
  const Circuit f2 = sima_full_procedure(split_negations(to_standard_form(build_f_prime(p))));
  EXPECT_EQ(print_formula(f2), "x0 | x0 & x1 & x2");
  EXPECT_EQ(check_equivalence(f2, parse_formula("INPUTS 3; x0")).verdict, Verdict::Equivalent);

  const Circuit one = sima_full_procedure(split_negations(parse_formula("!x0")));
  EXPECT_EQ(one.input_arity(), 1u);
  EXPECT_EQ(truth_table(one).count_ones(), 2u);
}

TEST(sima_full_procedure, always_not_free_with_original_arity) {
  gen::Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = gen::uniform(rng, 1, 8);
    const DualRailCircuit d = split_negations(to_standard_form(gen::random_circuit(rng, n, 15, true)));
    const Circuit out = sima_full_procedure(d);
    EXPECT_EQ(gate_stats(out).not_count, 0u);
    EXPECT_EQ(out.input_arity(), n);
    EXPECT_TRUE(is_monotone(truth_table(out)).monotone);
  }
}

TEST(sima_full_procedure, identity_on_monotone_input) {
  gen::Rng rng(48);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t n = gen::uniform(rng, 1, 10);
    const Circuit c = gen::random_circuit(rng, n, 20, false);
    const Circuit out = sima_full_procedure(split_negations(c));
    EXPECT_EQ(truth_table(out), truth_table(c));
  }
}

TEST(sop_serialization, round_trip_and_format) {
  const SopFormula s = sop(6, {{0, 3}, {0, 1, 2}, Product{}});
  const std::string text = serialize(s);
  EXPECT_EQ(text, "SOP 6 3\n\n0 1 2\n0 3\n");
  EXPECT_EQ(deserialize_sop(text), s);

  gen::Rng rng(49);
  for (int i = 0; i < 100; ++i) {
    const SopFormula r = gen::random_sop(rng, gen::uniform(rng, 1, 6));
    EXPECT_EQ(deserialize_sop(serialize(r)), r);
  }
}

TEST(sop_serialization, rejects_malformed) {
  EXPECT_THROW(deserialize_sop("SOP 2\n"), ParseError);
  EXPECT_THROW(deserialize_sop("SOP 2 1\n2\n"), ParseError);
  EXPECT_THROW(deserialize_sop("SOP 2 2\n0\n"), ParseError);
  EXPECT_THROW(deserialize_sop("SOP 2 1\n0 x\n"), ParseError);
  EXPECT_THROW(deserialize_sop("SOP 2 1\n0\n1\n"), ParseError);
  EXPECT_THROW(deserialize_sop("INPUTS 2\n"), ParseError);
}

TEST(extracted_serialization, format) {
  EXPECT_EQ(serialize(extract_negated(f_prime_3_3_sop(), 0)),
            "EXTRACT 0\nTERM_A\nSOP 6 1\n0\nREST\nSOP 6 1\n0 1 2\n");
}
