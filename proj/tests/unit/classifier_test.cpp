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

#include "subnorm/classifier.hpp"
#include "subnorm/oracle.hpp"
#include "support/testing.hpp"

namespace subnorm {
namespace {

using testing::sample;

void expect_witness_rechecks(const ClassificationReport& r, const PiecewiseMonotoneFn& f, const TNorm& t) {
  GeneratedOp op(f, t);
  for (const auto& [p, v] : r.verdicts) {
    if (!v.is(Status::no) || !v.witness) continue;
    auto chk = check_instance(op.as_op(), v.witness->property, v.witness->inputs);
    if (v.witness->conclusive) EXPECT_EQ(chk.violated, Truth::yes) << to_string(p) << " " << v.witness->str();
    else EXPECT_NE(chk.violated, Truth::no) << to_string(p) << " " << v.witness->str();
  }
}

void expect_consistent(const ClassificationReport& r) {
  auto is = [&](Property p, Status s) { return r.status(p) == s; };
  if (is(Property::cancellative, Status::yes)) { EXPECT_TRUE(is(Property::conditionally_cancellative, Status::yes)); }
  if (is(Property::conditionally_cancellative, Status::yes)) { EXPECT_TRUE(is(Property::t_subnorm, Status::yes)); }
  if (is(Property::t_norm, Status::yes)) { EXPECT_TRUE(is(Property::t_subnorm, Status::yes)); }
  if (is(Property::proper, Status::yes)) {
    EXPECT_TRUE(is(Property::t_subnorm, Status::yes));
    EXPECT_TRUE(is(Property::t_norm, Status::no));
  }
  if (is(Property::t_subnorm, Status::no)) {
    EXPECT_FALSE(is(Property::conditionally_cancellative, Status::yes));
    EXPECT_FALSE(is(Property::t_norm, Status::yes));
  }
}

TEST(Classifier, PlateauProduct) {
  auto f = sample("plateau");
  auto r = classify(f, TNorm::product());
  EXPECT_EQ(r.status(Property::t_subnorm), Status::yes);
  EXPECT_EQ(r.status(Property::conditionally_cancellative), Status::yes);
  EXPECT_EQ(r.status(Property::cancellative), Status::no);
  EXPECT_EQ(r.status(Property::t_norm), Status::no);
  EXPECT_EQ(r.status(Property::proper), Status::yes);
  expect_witness_rechecks(r, f, TNorm::product());
  expect_consistent(r);
}

TEST(Classifier, HalfJumpHamacher) {
  auto f = sample("half_jump");
  auto r = classify(f, TNorm::hamacher2());
  EXPECT_EQ(r.status(Property::cancellative), Status::yes);
  EXPECT_EQ(r.status(Property::conditionally_cancellative), Status::yes);
  EXPECT_EQ(r.status(Property::t_subnorm), Status::yes);
  EXPECT_EQ(r.status(Property::t_norm), Status::yes);
  EXPECT_EQ(r.status(Property::strictly_monotone_op), Status::yes);
  EXPECT_EQ(r.status(Property::continuous), Status::no);
  expect_consistent(r);
}

TEST(Classifier, NonStrictTNormsAreGated) {
  for (const char* name : {"identity", "quarter_affine", "step", "plateau"}) {
    auto f = sample(name);
    auto r = classify(f, TNorm::minimum());
    EXPECT_EQ(r.status(Property::conditionally_cancellative), Status::unknown) << name;
    EXPECT_NE(r[Property::conditionally_cancellative].evidence.front().find("preconditions unmet"), std::string::npos);
    expect_witness_rechecks(r, f, TNorm::minimum());
  }
  auto r = classify(PiecewiseMonotoneFn::identity(), TNorm::minimum());
  EXPECT_EQ(r.status(Property::archimedean), Status::no);
}

TEST(Classifier, StepProductIsNotConditionallyCancellative) {
  auto f = sample("step");
  auto r = classify(f, TNorm::product());
  EXPECT_EQ(r.status(Property::conditionally_cancellative), Status::no);
  EXPECT_EQ(r.status(Property::t_subnorm), Status::no);
  expect_witness_rechecks(r, f, TNorm::product());
  expect_consistent(r);
}

TEST(Classifier, Degenerate) {
  auto constant = PiecewiseMonotoneFn::parse("monotone: nondecreasing\nsegment [0,1] const 1/2\n");
  auto r = check_degenerate(constant, TNorm::product());
  ASSERT_TRUE(r);
  GeneratedOp op(constant, TNorm::product());
  bool zero = true;
  for (const auto& x : grid(8))
    for (const auto& y : grid(8)) zero = zero && op.exact(x, y).is_zero();
  EXPECT_EQ(r->status(Property::conditionally_cancellative), zero ? Status::yes : Status::no);

  auto drop = PiecewiseMonotoneFn::parse("monotone: nonincreasing\npoint 0 = 1\nsegment (0,1] const 0\n");
  auto d = check_degenerate(drop, TNorm::product());
  ASSERT_TRUE(d);
  EXPECT_EQ(d->status(Property::conditionally_cancellative), Status::yes);
  EXPECT_EQ(d->status(Property::t_subnorm), Status::yes);

  EXPECT_FALSE(check_degenerate(PiecewiseMonotoneFn::identity(), TNorm::product()));
  EXPECT_FALSE(check_degenerate(sample("half_jump"), TNorm::hamacher2()));
}

TEST(Classifier, InclusionConditions) {
  auto [ii, iii] = check_inclusion_conditions(sample("plateau"), TNorm::product());
  EXPECT_EQ(ii.status, Status::yes);
  EXPECT_EQ(iii.status, Status::yes);
  auto [bii, biii] = check_inclusion_conditions(sample("branch13"), TNorm::halfprod());
  EXPECT_EQ(bii.status, Status::no);
  EXPECT_EQ(bii.value_witness, (std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 8)}));
  auto [gii, giii] = check_inclusion_conditions(sample("plateau"), TNorm::generator(GeneratorSpec::parse("neglog")));
  EXPECT_EQ(gii.status, Status::unknown);
}

TEST(Classifier, HkSets) {
  EXPECT_TRUE(h_k_sets(sample("plateau"), TNorm::product()).empty());
  for (const auto& [k, h] : h_k_sets(PiecewiseMonotoneFn::identity(), TNorm::product())) EXPECT_TRUE(h.empty());
  auto hj = h_k_sets(sample("half_jump"), TNorm::hamacher2());
  ASSERT_EQ(hj.size(), 1u);
  EXPECT_THROW(h_k_sets(sample("plateau"), TNorm::generator(GeneratorSpec::parse("neglog"))), DomainError);
}

TEST(Classifier, SufficientCondition) {
  EXPECT_EQ(check_prop_sufficient(sample("plateau"), TNorm::product()).status, Status::yes);
  EXPECT_EQ(check_prop_sufficient(PiecewiseMonotoneFn::identity(), TNorm::product()).status, Status::yes);
  EXPECT_EQ(check_prop_sufficient(sample("plateau"), TNorm::minimum()).status, Status::unknown);
  // f(1) = 1 with a violated H condition: x/2 below 1/2, identity above
  auto f = PiecewiseMonotoneFn::parse("monotone: nondecreasing\nsegment [0,1/2) linear 1/2 0\nsegment [1/2,1] linear 1 0\n");
  auto v = check_prop_sufficient(f, TNorm::product());
  if (v.is(Status::no) && v.witness) {
    GeneratedOp op(f, TNorm::product());
    EXPECT_NE(check_instance(op.as_op(), v.witness->property, v.witness->inputs).violated, Truth::no);
  }
  EXPECT_NE(v.status, Status::unknown);
}

TEST(Classifier, LSetCheck) {
  auto inc = PiecewiseMonotoneFn::parse("monotone: nondecreasing\nsegment [0,1] linear 1/2 0\n");
  EXPECT_NE(l_set_check(inc, TNorm::product(), 32).status, Status::no);
  auto v = l_set_check(sample("step"), TNorm::product(), 64);
  if (v.is(Status::no) && v.witness) {
    GeneratedOp op(sample("step"), TNorm::product());
    EXPECT_EQ(check_instance(op.as_op(), v.witness->property, v.witness->inputs).violated, Truth::yes);
  }
}

TEST(Classifier, Cancellative) {
  EXPECT_EQ(check_cancellative(sample("half_jump"), TNorm::hamacher2()).status, Status::yes);
  EXPECT_EQ(check_cancellative(PiecewiseMonotoneFn::identity(), TNorm::product()).status, Status::yes);
  auto p = check_cancellative(sample("plateau"), TNorm::product());
  EXPECT_EQ(p.status, Status::no);
  ASSERT_TRUE(p.witness);
  GeneratedOp op(sample("plateau"), TNorm::product());
  EXPECT_EQ(check_instance(op.as_op(), p.witness->property, p.witness->inputs).violated, Truth::yes);
}

TEST(Classifier, Continuity) {
  EXPECT_EQ(check_continuity(PiecewiseMonotoneFn::identity(), TNorm::product()).status, Status::yes);
  auto v = check_continuity(sample("half_jump"), TNorm::product());
  EXPECT_EQ(v.status, Status::no);
  EXPECT_FALSE(v.value_witness.empty());
  auto [f, t] = lambda_decompose(GeneratorSpec::parse("one-minus-log"), Rational(1, 2));
  EXPECT_EQ(check_continuity(f, t).status, Status::yes);
  EXPECT_EQ(check_continuity(sample("plateau"), TNorm::product()).status, Status::unknown);
}

TEST(Classifier, PlateauAtGapBottomBlocksHCriterion) {
  auto f = PiecewiseMonotoneFn::parse(
      "monotone: nondecreasing\n"
      "segment [0,9/14] const 0\n"
      "segment (9/14,1] linear 21/40 19/40\n");
  auto r = classify(f, TNorm::product());
  EXPECT_EQ(r.status(Property::t_subnorm), Status::no);
  EXPECT_NE(r.status(Property::proper), Status::yes);
  GeneratedOp op(f, TNorm::product());
  auto c = check_instance(op.as_op(), PropertyName{Law::associativity}, {Rational(2, 3), Rational(2, 3), Rational(1)});
  ASSERT_TRUE(c.counterexample);
  EXPECT_EQ(c.counterexample->lhs.str(), "0");
  EXPECT_EQ(c.counterexample->rhs.str(), "9/14");
  expect_witness_rechecks(r, f, TNorm::product());
}

TEST(Classifier, ArchimedeanFixedPointNearOne) {
  auto f = PiecewiseMonotoneFn::parse(
      "monotone: nondecreasing\n"
      "segment [0,1/2) linear 7/18 1/4\n"
      "point 1/2 = 37/72\n"
      "segment (1/2,10/11) linear 11/27 41/108\n"
      "point 10/11 = 31/40\n"
      "segment (10/11,1] linear 11/5 -6/5\n");
  auto r = classify(f, TNorm::hamacher2());
  EXPECT_EQ(r.status(Property::archimedean), Status::no);
  GeneratedOp op(f, TNorm::hamacher2());
  EXPECT_EQ(op.exact(Rational(23, 24), Rational(1, 2)), Rational(1, 2));
  expect_witness_rechecks(r, f, TNorm::hamacher2());
}

TEST(ClassifierProperty, StrictlyIncreasingContinuousFromZeroIsCancellative) {
  std::mt19937_64 rng(2026);
  testing::RandomFnOptions o;
  o.strictly_increasing = true;
  o.continuous = true;
  o.zero_at_zero = true;
  for (int trial = 0; trial < 100; ++trial) {
    auto f = testing::random_fn(rng, o);
    auto r = classify(f, TNorm::product());
    EXPECT_EQ(r.status(Property::cancellative), Status::yes) << f.render();
    EXPECT_EQ(r.status(Property::continuous), Status::yes) << f.render();
    expect_consistent(r);
  }
}

TEST(ClassifierProperty, TopValueOneIsDecided) {
  std::mt19937_64 rng(404);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 40; ++trial) {
    auto f = testing::random_fn(rng);
    if (f(1) != Rational(1)) continue;
    auto d = decompose(f);
    if (d.q.contains(1) || d.q.contains(f.side_limit(1, Side::left))) continue;
    ++seen;
    for (auto t : {TNorm::product(), TNorm::hamacher2()}) {
      auto r = classify(f, t);
      EXPECT_NE(r.status(Property::conditionally_cancellative), Status::unknown) << f.render() << t.name();
    }
  }
  EXPECT_GT(seen, 10);
}

TEST(ClassifierProperty, YesVerdictsSurviveTheOracle) {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = testing::random_fn(rng, {.max_segments = 4});
    for (auto t : {TNorm::product(), TNorm::hamacher2()}) {
      auto h = consistency_harness(f, t, 24);
      EXPECT_EQ(h.hard_failures(), 0) << f.render() << t.name();
      expect_consistent(h.classification);
      expect_witness_rechecks(h.classification, f, t);
      if (h.classification.status(Property::t_subnorm) == Status::yes) {
        GeneratedOp op(f, t);
        for (const auto& x : grid(12))
          for (const auto& y : grid(12)) EXPECT_LE(op.exact(x, y), min(x, y));
      }
    }
  }
}

}  // namespace
}  // namespace subnorm
