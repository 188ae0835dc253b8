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

#include "subnorm/monotone_fn.hpp"
#include "support/testing.hpp"

namespace subnorm {
namespace {

using testing::sample;

TEST(MonotoneFn, Evaluation) {
  EXPECT_EQ(sample("quarter_affine")(Rational(1, 2)), Rational(3, 8));
  EXPECT_EQ(sample("quarter_affine")(1), Rational(1));
  EXPECT_EQ(PiecewiseMonotoneFn::identity()(0), Rational(0));
  EXPECT_EQ(sample("branch13")(Rational(1, 2)), Rational(11, 24));
  EXPECT_EQ(sample("step")(Rational(1, 2)), Rational(5, 16));
  EXPECT_EQ(sample("step")(1), Rational(3, 4));
  EXPECT_THROW(sample("step")(Rational(5, 4)), DomainError);
  EXPECT_THROW(sample("step")(Rational(-1, 4)), DomainError);
}

TEST(MonotoneFn, SideLimits) {
  EXPECT_EQ(sample("plateau").side_limit(0, Side::left), Rational(0));
  EXPECT_EQ(sample("step").side_limit(0, Side::left), Rational(0));
  EXPECT_EQ(sample("step").side_limit(Rational(1, 2), Side::right), Rational(7, 16));
  EXPECT_EQ(sample("step").side_limit(1, Side::left), Rational(1, 2));
  EXPECT_EQ(sample("half_jump").side_limit(1, Side::right), Rational(1));
  EXPECT_EQ(sample("decreasing").side_limit(0, Side::left), Rational(1));
}

TEST(MonotoneFn, PseudoInverse) {
  auto id = PiecewiseMonotoneFn::identity();
  EXPECT_EQ(pseudo_inverse(id), id);
  EXPECT_EQ(pseudo_inverse_at(sample("plateau"), Rational(1, 4)), Rational(0));
  EXPECT_EQ(pseudo_inverse_at(sample("half_jump"), Rational(1, 4)), Rational(1, 2));
  EXPECT_EQ(pseudo_inverse_at(sample("half_jump"), Rational(3, 4)), Rational(1));
  EXPECT_EQ(pseudo_inverse_at(sample("step"), Rational(9, 16)), Rational(1));
  EXPECT_EQ(pseudo_inverse_at(sample("decreasing"), Rational(1, 4)), Rational(3, 4));
}

TEST(MonotoneFn, RangeAndPlateaus) {
  EXPECT_EQ(sample("step").range().str(), "[1/4,5/16]∪(7/16,1/2)∪{3/4}");
  EXPECT_EQ(PiecewiseMonotoneFn::identity().range(), IntervalSet::unit());
  EXPECT_EQ(sample("half_jump").range().str(), "[0,1/2)∪{1}");
  EXPECT_EQ(sample("branch13").range().str(), "[0,1/8)∪[3/16,1]");
  EXPECT_TRUE(PiecewiseMonotoneFn::identity().plateau_set().empty());
  EXPECT_TRUE(sample("half_jump").plateau_set().empty());
  EXPECT_EQ(sample("plateau").plateau_set().str(), "{1/2}");
  EXPECT_EQ(sample("step").plateau_set().str(), "{5/16}");
}

TEST(MonotoneFn, ContinuityFlags) {
  EXPECT_TRUE(PiecewiseMonotoneFn::identity().continuous());
  EXPECT_FALSE(sample("half_jump").continuous());
  EXPECT_TRUE(sample("half_jump").right_continuous());
  EXPECT_TRUE(sample("plateau").continuous());
  EXPECT_FALSE(sample("step").right_continuous());
}

TEST(MonotoneFn, ParseRejectsInvalidFunctions) {
  const char* cases[] = {
      "segment [0,1] linear 1 0\n",                                            // no direction
      "monotone: nondecreasing\nsegment [0,1/2] linear 1 0\n",                  // does not reach 1
      "monotone: nondecreasing\nsegment [0,1/2] linear 1 0\nsegment [1/2,1] linear 1 0\n",  // overlap
      "monotone: nondecreasing\nsegment [0,1] linear -1 1\n",                   // wrong slope sign
      "monotone: nondecreasing\nsegment [0,1/2) const 1/2\nsegment [1/2,1] const 1/4\n",  // not monotone
      "monotone: nondecreasing\nsegment [0,1] linear 2 0\n",                    // leaves [0,1]
      "monotone: sideways\nsegment [0,1] linear 1 0\n",
      "monotone: nondecreasing\nsegment [0,1] wiggle 1 0\n",
      "monotone: nondecreasing\nsegment [0,1] linear 0 1/2\n",
      "monotone: nondecreasing\nsegment [0,1) linear 1 0\npoint 1\n",
  };
  for (const char* text : cases) EXPECT_THROW(PiecewiseMonotoneFn::parse(text), ParseError) << text;
}

TEST(MonotoneFn, RenderParseRoundTrip) {
  for (const char* name : {"identity", "plateau", "step", "half_jump", "branch13", "quarter_affine", "decreasing"}) {
    auto f = sample(name);
    EXPECT_EQ(PiecewiseMonotoneFn::parse(f.render()), f) << name;
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    testing::RandomFnOptions o;
    o.direction = i % 3 == 0 ? Direction::non_increasing : Direction::non_decreasing;
    auto f = testing::random_fn(rng, o);
    EXPECT_EQ(PiecewiseMonotoneFn::parse(f.render()), f) << f.render();
  }
}

class PseudoInverseProperty : public ::testing::TestWithParam<int> {};

TEST_P(PseudoInverseProperty, LawsAndBisectionOracle) {
  std::mt19937_64 rng(static_cast<unsigned>(GetParam()));
  testing::RandomFnOptions o;
  o.right_continuous = GetParam() % 3 == 1;
  o.strictly_increasing = GetParam() % 3 == 2;
  o.direction = GetParam() % 5 == 4 && !o.strictly_increasing ? Direction::non_increasing : Direction::non_decreasing;
  auto f = testing::random_fn(rng, o);
  auto finv = pseudo_inverse(f);
  for (int k = 0; k < 60; ++k) {
    Rational x = testing::random_unit(rng, 64);
    Rational y = testing::random_unit(rng, 64);
    EXPECT_EQ(finv(y), pseudo_inverse_at(f, y)) << f.render() << " y=" << y;
    EXPECT_EQ(finv(y), testing::bisect_pseudo_inverse(f, y)) << f.render() << " y=" << y;
    EXPECT_LE(finv(f(x)), x) << f.render() << " x=" << x;
    if (o.right_continuous || o.strictly_increasing) { EXPECT_EQ(f(finv(f(x))), f(x)) << f.render() << " x=" << x; }
  }
}

INSTANTIATE_TEST_SUITE_P(Random, PseudoInverseProperty, ::testing::Range(1, 31));

}  // namespace
}  // namespace subnorm
