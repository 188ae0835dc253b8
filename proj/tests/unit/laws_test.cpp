/*
 * Copyright 2026 The subnorm-forge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <random>

#include <gtest/gtest.h>

#include "subnorm/laws.hpp"
#include "subnorm/oracle.hpp"
#include "subnorm/scan.hpp"
#include "support/testing.hpp"

namespace subnorm {
namespace {

TEST(Laws, CheckInstance) {
  auto prod = TNorm::product().as_op();
  EXPECT_EQ(check_instance(prod, {Law::associativity}, {Rational(1, 3), Rational(1, 2), Rational(3, 4)}).violated,
            Truth::no);
  auto half = TNorm::halfprod().as_op();
  auto c = check_instance(half, {Law::associativity}, {Rational(3, 5), Rational(4, 5), Rational(1, 2)});
  EXPECT_EQ(c.violated, Truth::yes);
  ASSERT_TRUE(c.counterexample);
  EXPECT_EQ(c.counterexample->lhs.exact(), Rational(3, 25));
  EXPECT_EQ(c.counterexample->rhs.exact(), Rational(6, 25));
  auto mn = TNorm::minimum().as_op();
  EXPECT_EQ(check_instance(mn, {Law::cancellation}, {Rational(1, 2), Rational(3, 4), Rational(1)}).violated, Truth::yes);
  EXPECT_EQ(check_instance(mn, {Law::archimedean, 64}, {Rational(1, 2), Rational(1, 4)}).violated, Truth::yes);
  EXPECT_EQ(check_instance(prod, {Law::archimedean, 64}, {Rational(1, 2), Rational(1, 4)}).violated, Truth::no);
  EXPECT_EQ(check_instance(prod, {Law::neutral_one}, {Rational(2, 3)}).violated, Truth::no);
  EXPECT_THROW(check_instance(prod, {Law::neutral_one}, {Rational(2, 3), Rational(1)}), std::invalid_argument);
}

TEST(Laws, PowerSequenceStopsAtFixedPoint) {
  auto seq = power_sequence(TNorm::minimum().as_op(), Rational(1, 2), 100);
  EXPECT_EQ(seq.size(), 2u);
  auto p = power_sequence(TNorm::product().as_op(), Rational(1, 2), 5);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p.back().exact(), Rational(1, 32));
}

TEST(OracleGrid, Points) {
  EXPECT_EQ(grid(2), (std::vector<Rational>{0, Rational(1, 2), 1}));
  EXPECT_EQ(grid(4, {Rational(9, 10)}),
            (std::vector<Rational>{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(9, 10), 1}));
  auto g = grid_for(testing::sample("step"), 8);
  EXPECT_TRUE(std::binary_search(g.begin(), g.end(), Rational(1, 4)));
  EXPECT_TRUE(std::binary_search(g.begin(), g.end(), Rational(1, 2)));
  EXPECT_THROW(grid(0), DomainError);
  EXPECT_THROW(grid(3, {Rational(3, 2)}), DomainError);
}

TEST(OracleCheck, SpecExamples) {
  EXPECT_TRUE(check_property(TNorm::minimum().as_op(), {Law::associativity}, grid(10)).ok());
  GeneratedOp quarter_min(testing::sample("quarter_affine"), TNorm::minimum());
  auto r = check_property(quarter_min.as_op(), {Law::conditional_cancellation}, grid(8));
  ASSERT_TRUE(r.counterexample());
  EXPECT_TRUE(r.conclusive());
  auto named = check_instance(quarter_min.as_op(), {Law::conditional_cancellation},
                              {Rational(1, 2), Rational(3, 4), Rational(1)});
  EXPECT_EQ(named.violated, Truth::yes);
  EXPECT_EQ(named.counterexample->lhs.exact(), Rational(1, 2));
  GeneratedOp step(testing::sample("step"), TNorm::product());
  std::vector<Rational> pts = grid(20, {Rational(4, 5), Rational(9, 10)});
  auto a = check_property(step.as_op(), {Law::associativity}, pts);
  ASSERT_TRUE(a.counterexample());
  EXPECT_EQ(check_instance(step.as_op(), {Law::associativity}, a.scan.first->inputs).violated, Truth::yes);
}

TEST(OracleCheck, ExaminesEveryTripleWhenNoViolation) {
  auto pts = grid(9);
  auto r = check_property(TNorm::product().as_op(), {Law::associativity}, pts);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.scan.examined, pts.size() * pts.size() * pts.size());
  auto c = check_property(TNorm::product().as_op(), {Law::commutativity}, pts);
  EXPECT_EQ(c.scan.examined, pts.size() * pts.size());
}

/// Plain triple loop, first violation in lexicographic order.
std::optional<std::array<Rational, 3>> naive_assoc(const GeneratedOp& op, const std::vector<Rational>& pts) {
  for (const auto& x : pts)
    for (const auto& y : pts)
      for (const auto& z : pts)
        if (op.exact(op.exact(x, y), z) != op.exact(x, op.exact(y, z))) return std::array{x, y, z};
  return std::nullopt;
}

TEST(OracleCheck, AssociativityMatchesNaiveScanAndIsDeterministic) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = testing::random_fn(rng);
    auto t = trial % 2 ? TNorm::product() : TNorm::minimum();
    GeneratedOp op(f, t);
    auto pts = grid_for(f, 10);
    auto want = naive_assoc(op, pts);
    auto got = check_property(op.as_op(), {Law::associativity}, pts);
    auto again = check_property(op.as_op(), {Law::associativity}, pts);
    ASSERT_EQ(got.counterexample(), want.has_value()) << f.render();
    EXPECT_EQ(got.scan.examined, again.scan.examined);
    if (want) {
      EXPECT_EQ(got.scan.first->inputs, std::vector<Rational>(want->begin(), want->end())) << f.render();
      EXPECT_EQ(again.scan.first->inputs, got.scan.first->inputs);
    } else {
      EXPECT_EQ(got.scan.examined, pts.size() * pts.size() * pts.size());
    }
  }
}

TEST(OracleCheck, GeneratorEqualityLawsAreUndecidedNotRefuted) {
  auto op = additive_generated(GeneratorSpec::parse("neglog"));
  auto r = check_property(op, {Law::commutativity}, grid(6));
  EXPECT_FALSE(r.counterexample());
  auto b = check_property(op, {Law::bounded_by_min}, grid(6));
  EXPECT_FALSE(b.counterexample());
}

TEST(Harness, IdentityProductAgreesEverywhere) {
  auto h = consistency_harness(PiecewiseMonotoneFn::identity(), TNorm::product(), 12);
  EXPECT_EQ(h.hard_failures(), 0);
  for (Law l : {Law::commutativity, Law::monotonicity, Law::bounded_by_min, Law::associativity, Law::neutral_one,
                Law::conditional_cancellation, Law::cancellation, Law::strict_monotonicity})
    EXPECT_TRUE(h.laws.at(l).ok()) << PropertyName{l}.str();
  for (const auto& row : h.rows)
    if (row.property != Property::proper) { EXPECT_NE(row.classifier, Status::no) << to_string(row.property); }
}

TEST(Harness, PlateauProductAtFineGrid) {
  auto h = consistency_harness(testing::sample("plateau"), TNorm::product(), 24);
  EXPECT_EQ(h.hard_failures(), 0);
  EXPECT_EQ(h.classification.status(Property::conditionally_cancellative), Status::yes);
  EXPECT_TRUE(h.laws.at(Law::conditional_cancellation).ok());
  EXPECT_TRUE(h.laws.at(Law::associativity).ok());
}

TEST(Harness, QuarterAffineMinRefutesConditionalCancellation) {
  auto h = consistency_harness(testing::sample("quarter_affine"), TNorm::minimum(), 8);
  EXPECT_EQ(h.hard_failures(), 0);
  const auto& r = h.laws.at(Law::conditional_cancellation);
  ASSERT_TRUE(r.counterexample());
  EXPECT_NE(h.classification.status(Property::conditionally_cancellative), Status::yes);
}

}  // namespace
}  // namespace subnorm
