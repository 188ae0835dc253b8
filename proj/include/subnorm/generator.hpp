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

#include <mpfr.h>

#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "subnorm/rational.hpp"
#include "subnorm/value.hpp"

namespace subnorm {

namespace detail {

/// Owning mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  Rational to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return Rational(std::move(q));
  }

 private:
  mpfr_t v_;
};

/// Closed interval [lo, hi] of reals with directed-rounding arithmetic.
/// Only the monotone operations the generators need are provided.
class Ball {
 public:
  Ball(const Rational& q, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_q(lo_.get(), q.gmp().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), q.gmp().get_mpq_t(), MPFR_RNDU);
  }
  static Ball constant_e(mpfr_prec_t prec) {
    Ball b(Rational(1), prec);
    mpfr_exp(b.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_exp(b.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return b;
  }

  Ball log() const {  // precondition: lo > 0
    Ball r = *this;
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
  }
  Ball exp() const {
    Ball r = *this;
    mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
  }
  Ball operator-() const {
    Ball r = *this;
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
  }
  friend Ball operator+(const Ball& a, const Ball& b) {
    Ball r = a;
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }
  friend Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }
  /// Product with a non-negative ball.
  friend Ball operator*(const Ball& a, const Ball& b) {
    Ball r = a;
    if (mpfr_sgn(a.lo_.get()) >= 0) {
      mpfr_mul(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
      mpfr_mul(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    } else {
      Mpfr t(a.lo_.prec());
      mpfr_mul(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
      mpfr_mul(t.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
      mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
      mpfr_mul(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
      mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    }
    return r;
  }
  Ball clamp_below(long floor) const {
    Ball r = *this;
    if (mpfr_cmp_si(r.lo_.get(), floor) < 0) mpfr_set_si(r.lo_.get(), floor, MPFR_RNDD);
    if (mpfr_cmp_si(r.hi_.get(), floor) < 0) mpfr_set_si(r.hi_.get(), floor, MPFR_RNDU);
    return r;
  }
  Ball clamp_above(long ceil) const {
    Ball r = *this;
    if (mpfr_cmp_si(r.lo_.get(), ceil) > 0) mpfr_set_si(r.lo_.get(), ceil, MPFR_RNDD);
    if (mpfr_cmp_si(r.hi_.get(), ceil) > 0) mpfr_set_si(r.hi_.get(), ceil, MPFR_RNDU);
    return r;
  }

  /// Sign of every element, or 0 when the ball straddles / touches zero.
  int certain_sign() const {
    if (mpfr_sgn(lo_.get()) > 0) return 1;
    if (mpfr_sgn(hi_.get()) < 0) return -1;
    return 0;
  }

  Value to_value() const { return Value::enclosure(lo_.to_rational(), hi_.to_rational()); }

 private:
  Mpfr lo_, hi_;
};

}  // namespace detail

enum class GeneratorKind { neglog, one_minus_log };

/**
 * Registry generator g: [0,1] → [0,∞], continuous and strictly decreasing
 * with g(0) = ∞. Formulas extend naturally to (0,∞).
 *
 *   neglog         g(x) = −ln x
 *   one-minus-log  g(x) = 1 − ln x
 */
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::neglog;
  int digits = 40;

  static GeneratorSpec parse(std::string_view name) {
    if (name == "neglog") return {GeneratorKind::neglog};
    if (name == "one-minus-log") return {GeneratorKind::one_minus_log};
    throw ParseError("unknown generator '" + std::string(name) + "' (expected neglog or one-minus-log)");
  }
  std::string name() const { return kind == GeneratorKind::neglog ? "neglog" : "one-minus-log"; }
  mpfr_prec_t precision() const { return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 32; }

  /// g(1); exact.
  Rational at_one() const { return kind == GeneratorKind::neglog ? Rational(0) : Rational(1); }

  /// Extended formula on a ball of positive reals.
  detail::Ball g(const detail::Ball& u) const {
    auto minus_log = -u.log();
    return kind == GeneratorKind::neglog ? minus_log : minus_log + detail::Ball(Rational(1), precision());
  }
  /// Inverse of the extended formula, defined on all reals.
  detail::Ball g_ext_inv(const detail::Ball& s) const {
    return kind == GeneratorKind::neglog ? (-s).exp() : (detail::Ball(Rational(1), precision()) - s).exp();
  }

  /// g⁽⁻¹⁾(g(x)+g(y)) on [0,1]².
  Value combine(const Rational& x, const Rational& y) const {
    require_unit(x, "x");
    require_unit(y, "y");
    if (x.is_zero() || y.is_zero()) return Rational(0);
    if (kind == GeneratorKind::neglog) {
      if (y == Rational(1)) return x;
      if (x == Rational(1)) return y;
    }
    const auto prec = precision();
    auto s = g(detail::Ball(x, prec)) + g(detail::Ball(y, prec));
    return clip(g_ext_inv(s).clamp_above(1).to_value());
  }

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;

  static Value clip(const Value& v) {
    Rational lo = max(v.lo(), Rational(0)), hi = min(v.hi(), Rational(1));
    return lo == hi ? Value(lo) : Value::enclosure(lo, hi);
  }
};

/**
 * Additive generator t(x) = max(g(x/λ), 0) for x < 1, t(1) = 0, and the
 * operation t⁽⁻¹⁾(t(x)+t(y)) on [0,1)² completed by min on the rest of the
 * unit square.
 */
struct LambdaGenerator {
  GeneratorSpec gen;
  Rational lambda;

  /// t vanishes from λ·g⁻¹(0) on; returns whether that threshold exceeds 1,
  /// i.e. whether t(1⁻) = g(1/λ) > 0.
  bool positive_below_one() const {
    if (gen.kind == GeneratorKind::neglog) return lambda > Rational(1);
    auto thr = detail::Ball(lambda, gen.precision()) * detail::Ball::constant_e(gen.precision());
    return (thr - detail::Ball(Rational(1), gen.precision())).certain_sign() > 0;
  }

  detail::Ball t(const Rational& x) const {
    const auto prec = gen.precision();
    return gen.g(detail::Ball(x / lambda, prec)).clamp_below(0);
  }

  Value combine(const Rational& x, const Rational& y) const {
    require_unit(x, "x");
    require_unit(y, "y");
    if (x == Rational(1) || y == Rational(1)) return min(x, y);
    if (x.is_zero() || y.is_zero()) return Rational(0);
    auto s = t(x) + t(y);
    auto v = detail::Ball(lambda, gen.precision()) * gen.g_ext_inv(s);
    return GeneratorSpec::clip(v.clamp_above(1).to_value());
  }
};

}  // namespace subnorm
