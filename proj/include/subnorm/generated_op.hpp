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

#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "subnorm/generator.hpp"
#include "subnorm/monotone_fn.hpp"
#include "subnorm/tnorm.hpp"
#include "subnorm/value.hpp"

namespace subnorm {

/// F(x,y) = f⁽⁻¹⁾(T(f(x), f(y))).
class GeneratedOp {
 public:
  GeneratedOp(PiecewiseMonotoneFn f, TNorm t) : f_(std::move(f)), finv_(pseudo_inverse(f_)), t_(std::move(t)) {}

  const PiecewiseMonotoneFn& f() const { return f_; }
  const PiecewiseMonotoneFn& finv() const { return finv_; }
  const TNorm& t() const { return t_; }
  bool exact() const { return t_.exact(); }

  Value operator()(const Rational& x, const Rational& y) const {
    require_unit(x, "x");
    require_unit(y, "y");
    return pull_back(t_(f_(x), f_(y)));
  }

  Rational exact(const Rational& x, const Rational& y) const { return (*this)(x, y).exact(); }

  /// f⁽⁻¹⁾ applied to a value; enclosures map through the monotone finv.
  Value pull_back(const Value& v) const {
    if (v.is_exact()) return finv_(v.lo());
    Rational a = finv_(v.lo()), b = finv_(v.hi());
    if (b < a) std::swap(a, b);
    return a == b ? Value(a) : Value::enclosure(a, b);
  }

  BinaryOp as_op() const {
    GeneratedOp self = *this;
    return {"F[" + t_.name() + "]", [self](const Rational& x, const Rational& y) { return self(x, y); }, exact()};
  }

 private:
  PiecewiseMonotoneFn f_;
  PiecewiseMonotoneFn finv_;
  TNorm t_;
};

inline Value f_eval(const GeneratedOp& op, const Rational& x, const Rational& y) { return op(x, y); }

/// (x,y) ↦ g⁽⁻¹⁾(g(x)+g(y)).
inline BinaryOp additive_generated(GeneratorSpec g) {
  return {"additive:" + g.name(), [g](const Rational& x, const Rational& y) { return g.combine(x, y); }, false};
}

struct LambdaDecomposition {
  PiecewiseMonotoneFn f;
  TNorm t;
};

/// f(x) = λx together with the t-norm generated by t(x) = g(x/λ) (x < 1),
/// t(1) = 0.
inline LambdaDecomposition lambda_decompose(GeneratorSpec g, const Rational& lambda) {
  TNorm t = TNorm::lambda(g, lambda);
  PiecewiseMonotoneFn f(Direction::non_decreasing, {Segment::linear(Interval::closed(0, 1), lambda, 0)});
  return {std::move(f), std::move(t)};
}

/// Largest |g⁽⁻¹⁾(g(x)+g(y)) − f⁽⁻¹⁾(T(f(x),f(y)))| over the (n+1)×(n+1)
/// grid, as an upper bound from the enclosures.
inline Rational lambda_roundtrip_deviation(GeneratorSpec g, const Rational& lambda, int n) {
  auto [f, t] = lambda_decompose(g, lambda);
  GeneratedOp composed(f, t);
  Rational worst(0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Rational x(i, n), y(j, n);
      Value a = g.combine(x, y), b = composed(x, y);
      Rational dev = max(a.hi() - b.lo(), b.hi() - a.lo());
      worst = max(worst, dev);
    }
  return worst;
}

}  // namespace subnorm
