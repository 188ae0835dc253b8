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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "subnorm/generated_op.hpp"
#include "support/testing.hpp"

namespace subnorm {
namespace {

using testing::sample;

TEST(GeneratedOp, ClosedFormValues) {
  GeneratedOp plateau(sample("plateau"), TNorm::product());
  EXPECT_EQ(plateau.exact(Rational(3, 4), Rational(4, 5)), Rational(3, 5));
  EXPECT_EQ(plateau.exact(Rational(1, 2), Rational(1, 2)), Rational(0));
  EXPECT_EQ(plateau.exact(Rational(3, 4), Rational(2, 3)), Rational(0));
  EXPECT_EQ(plateau.exact(Rational(3, 4), Rational(9, 10)), Rational(27, 40));
  GeneratedOp branch(sample("branch13"), TNorm::halfprod());
  EXPECT_EQ(branch.exact(Rational(1, 2), Rational(1, 2)), Rational(121, 576));
  for (auto [x, y] : {std::pair{Rational(1, 3), Rational(1, 2)}, {Rational(2, 5), Rational(9, 20)}}) {
    Rational want = (Rational(169) * x * y - Rational(13) * x - Rational(13) * y + Rational(1)) / Rational(144);
    EXPECT_EQ(branch.exact(x, y), want);
  }
  EXPECT_EQ(branch.exact(Rational(1, 2), Rational(3, 4)), Rational(37, 96));
}

TEST(GeneratedOp, DisplayedClosedFormsAreRederived) {
  GeneratedOp hj(sample("half_jump"), TNorm::hamacher2());
  EXPECT_EQ(hj.exact(Rational(1, 2), Rational(1, 2)), Rational(2, 25));
  for (const auto& x : {Rational(1, 3), Rational(1, 2), Rational(4, 5)})
    for (const auto& y : {Rational(1, 4), Rational(2, 3), Rational(9, 10)})
      EXPECT_EQ(hj.exact(x, y), Rational(2) * x * y / (Rational(8) + x * y - Rational(2) * (x + y)));
  GeneratedOp step(sample("step"), TNorm::product());
  EXPECT_EQ(step.exact(1, Rational(9, 10)), Rational(1, 2));
  EXPECT_EQ(step.exact(1, 1), Rational(1));
}

TEST(GeneratedOp, DegenerateArguments) {
  for (const char* name : {"identity", "plateau", "half_jump", "branch13", "quarter_affine"}) {
    GeneratedOp op(sample(name), TNorm::product());
    if (sample(name)(0).is_zero()) { EXPECT_EQ(op.exact(0, 1), Rational(0)) << name; }
  }
  GeneratedOp op(sample("plateau"), TNorm::product());
  EXPECT_THROW(op(Rational(3, 2), 0), DomainError);
}

TEST(GeneratedOp, AgreesWithBisectionOracle) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    testing::RandomFnOptions o;
    o.direction = trial % 4 == 3 ? Direction::non_increasing : Direction::non_decreasing;
    auto f = testing::random_fn(rng, o);
    for (auto t : {TNorm::product(), TNorm::minimum(), TNorm::hamacher2(), TNorm::halfprod()}) {
      GeneratedOp op(f, t);
      for (int k = 0; k < 10; ++k) {
        Rational x = testing::random_unit(rng, 24), y = testing::random_unit(rng, 24);
        Rational want = testing::bisect_pseudo_inverse(f, t.exact(f(x), f(y)));
        EXPECT_EQ(op.exact(x, y), want) << f.render() << t.name() << " " << x << "," << y;
      }
    }
  }
}

TEST(GeneratedOp, AdditiveGenerated) {
  auto oml = additive_generated(GeneratorSpec::parse("one-minus-log"));
  EXPECT_NEAR(oml(1, 1).to_double(), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(oml(Rational(1, 2), Rational(1, 2)).to_double(), 0.25 / std::exp(1.0), 1e-12);
  auto neglog = additive_generated(GeneratorSpec::parse("neglog"));
  EXPECT_EQ(neglog(1, 1).exact(), Rational(1));
}

TEST(GeneratedOp, LambdaDecomposition) {
  auto g = GeneratorSpec::parse("one-minus-log");
  auto [f, t] = lambda_decompose(g, Rational(1, 2));
  EXPECT_EQ(f(1), Rational(1, 2));
  EXPECT_TRUE(f.continuous());
  EXPECT_TRUE(f.strictly_monotone());
  EXPECT_TRUE(t.flags().strictly_monotone);
  EXPECT_FALSE(t.flags().continuous);
  LambdaGenerator lg{g, Rational(1, 2)};
  EXPECT_TRUE(lg.positive_below_one());
  auto t_minus = lg.t(Rational(999999, 1000000));
  EXPECT_NEAR(t_minus.to_value().to_double(), 1 - std::log(2.0), 1e-5);
  GeneratedOp op(f, t);
  EXPECT_NEAR(op(Rational(1, 2), Rational(1, 2)).to_double(), 0.25 / std::exp(1.0), 1e-12);
  for (const auto& lambda : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
    EXPECT_LE(lambda_roundtrip_deviation(g, lambda, 50), Rational(1, 1000000000000L)) << lambda;
  EXPECT_THROW(lambda_decompose(g, 1), DomainError);
  EXPECT_THROW(lambda_decompose(g, 0), DomainError);
  EXPECT_THROW(lambda_decompose(g, Rational(-1, 2)), DomainError);
}

}  // namespace
}  // namespace subnorm
