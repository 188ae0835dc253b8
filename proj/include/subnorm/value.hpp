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

#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "subnorm/rational.hpp"

namespace subnorm {

enum class Truth { no, yes, unknown };

inline Truth truth(bool b) { return b ? Truth::yes : Truth::no; }
inline Truth operator!(Truth t) { return t == Truth::unknown ? t : (t == Truth::yes ? Truth::no : Truth::yes); }
inline Truth operator&&(Truth a, Truth b) {
  if (a == Truth::no || b == Truth::no) return Truth::no;
  return (a == Truth::yes && b == Truth::yes) ? Truth::yes : Truth::unknown;
}
inline Truth operator||(Truth a, Truth b) { return !(!a && !b); }

/**
 * A number in [0,1] known either exactly or as a rigorous enclosure
 * [lo, hi] with rational endpoints.
 */
class Value {
 public:
  Value() = default;
  Value(Rational exact) : lo_(std::move(exact)) {}  // NOLINT(google-explicit-constructor)
  Value(long v) : lo_(v) {}                          // NOLINT
  Value(int v) : lo_(v) {}                           // NOLINT

  static Value enclosure(Rational lo, Rational hi) {
    if (hi < lo) throw std::invalid_argument("reversed enclosure");
    Value v(std::move(lo));
    if (hi != v.lo_) v.hi_ = std::move(hi);
    return v;
  }

  bool is_exact() const { return !hi_.has_value(); }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_ ? *hi_ : lo_; }
  const Rational& exact() const {
    if (hi_) throw std::logic_error("value is not exact");
    return lo_;
  }
  Rational mid() const { return midpoint(lo(), hi()); }
  Rational radius() const { return (hi() - lo()) / Rational(2); }
  double to_double() const { return mid().to_double(); }

  /// Exact values as `p/q`; enclosures as `≈d±r` with 15 decimals.
  std::string str() const {
    if (is_exact()) return lo_.str();
    return "≈" + mid().decimal(15) + "±" + radius().decimal(15);
  }
  std::string decimal(int digits = 12) const { return mid().decimal(digits); }

  /// Identical representation (not numerical equality of unknown reals).
  friend bool operator==(const Value&, const Value&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

 private:
  Rational lo_;
  std::optional<Rational> hi_;
};

inline Truth lt(const Value& a, const Value& b) {
  if (a.hi() < b.lo()) return Truth::yes;
  if (b.hi() <= a.lo()) return Truth::no;
  return Truth::unknown;
}
inline Truth le(const Value& a, const Value& b) { return !lt(b, a); }
inline Truth eq(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return truth(a.lo() == b.lo());
  if (a.hi() < b.lo() || b.hi() < a.lo()) return Truth::no;
  return Truth::unknown;
}
inline Truth positive(const Value& a) { return lt(Value(0), a); }

/// A binary operation on [0,1], exact or enclosure-valued.
struct BinaryOp {
  std::string name;
  std::function<Value(const Rational&, const Rational&)> fn;
  bool exact = true;

  Value operator()(const Rational& x, const Rational& y) const { return fn(x, y); }
};

/// Applies a binary operation that is non-decreasing in both arguments to
/// possibly inexact arguments, by evaluating at the enclosure corners.
inline Value apply_monotone(const BinaryOp& op, const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return op(a.lo(), b.lo());
  Value low = op(a.lo(), b.lo()), high = op(a.hi(), b.hi());
  return Value::enclosure(low.lo(), high.hi());
}

}  // namespace subnorm
