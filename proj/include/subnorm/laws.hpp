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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subnorm/rational.hpp"
#include "subnorm/value.hpp"

namespace subnorm {

enum class Law {
  commutativity,
  monotonicity,
  bounded_by_min,
  associativity,
  neutral_one,
  conditional_cancellation,
  cancellation,
  strict_monotonicity,
  archimedean,
};

struct PropertyName {
  Law law;
  int n_iter = 256;  // archimedean only

  std::string str() const {
    switch (law) {
      case Law::commutativity: return "commutativity";
      case Law::monotonicity: return "monotonicity";
      case Law::bounded_by_min: return "bounded_by_min";
      case Law::associativity: return "associativity";
      case Law::neutral_one: return "neutral_one";
      case Law::conditional_cancellation: return "conditional_cancellation";
      case Law::cancellation: return "cancellation";
      case Law::strict_monotonicity: return "strict_monotonicity";
      case Law::archimedean: return "archimedean_at(" + std::to_string(n_iter) + ")";
    }
    return {};
  }
  /// Number of arguments of one instance.
  int arity() const {
    switch (law) {
      case Law::neutral_one: return 1;
      case Law::commutativity:
      case Law::bounded_by_min:
      case Law::archimedean: return 2;
      default: return 3;
    }
  }
  friend bool operator==(const PropertyName&, const PropertyName&) = default;
};

inline const std::vector<PropertyName>& all_laws() {
  static const std::vector<PropertyName> v{
      {Law::commutativity},           {Law::monotonicity}, {Law::bounded_by_min},
      {Law::associativity},           {Law::neutral_one},  {Law::conditional_cancellation},
      {Law::cancellation},            {Law::strict_monotonicity}, {Law::archimedean}};
  return v;
}

/**
 * A violated instance of a law. lhs and rhs are the two sides whose
 * relation fails; `relation` states the violated requirement.
 *
 * Archimedean instances are conclusive only when the power sequence reached
 * an exact fixed point at or above y; otherwise they record "not witnessed
 * within the cap".
 */
struct Counterexample {
  PropertyName property;
  std::vector<Rational> inputs;
  Value lhs, rhs;
  std::string relation;
  bool conclusive = true;

  std::string str() const {
    std::string s = property.str() + " (";
    for (std::size_t i = 0; i < inputs.size(); ++i) s += (i ? "," : "") + inputs[i].str();
    return s + "): " + relation + " with lhs=" + lhs.str() + " rhs=" + rhs.str();
  }
};

/// Outcome of testing one instance.
struct InstanceCheck {
  Truth violated = Truth::no;
  std::optional<Counterexample> counterexample;
};

/// Power sequence x, F(x,x), F(F(x,x),x), ... up to `cap` terms, stopping
/// early at an exact fixed point.
inline std::vector<Value> power_sequence(const BinaryOp& op, const Rational& x, int cap,
                                         const std::optional<Rational>& stop_below = std::nullopt) {
  std::vector<Value> seq{Value(x)};
  while (static_cast<int>(seq.size()) < cap) {
    const Value& p = seq.back();
    if (stop_below && lt(p, Value(*stop_below)) == Truth::yes) break;
    Value next = apply_monotone(op, p, Value(x));
    bool fixed = next.is_exact() && p.is_exact() && next.lo() == p.lo();
    seq.push_back(std::move(next));
    if (fixed) break;
  }
  return seq;
}

/// Re-evaluates one instance of a law; the basis of every re-checkable
/// witness in the library.
inline InstanceCheck check_instance(const BinaryOp& op, const PropertyName& p, const std::vector<Rational>& in) {
  if (static_cast<int>(in.size()) != p.arity()) throw std::invalid_argument("wrong arity for " + p.str());
  auto make = [&](Truth v, Value lhs, Value rhs, std::string rel, bool conclusive = true) {
    InstanceCheck r{v, std::nullopt};
    if (v != Truth::no) r.counterexample = Counterexample{p, in, std::move(lhs), std::move(rhs), std::move(rel), conclusive};
    return r;
  };
  switch (p.law) {
    case Law::commutativity: {
      Value a = op(in[0], in[1]), b = op(in[1], in[0]);
      return make(!eq(a, b), a, b, "F(x,y) = F(y,x)");
    }
    case Law::monotonicity: {
      if (in[2] < in[1]) throw std::invalid_argument("monotonicity instance needs y <= z");
      Value a = op(in[0], in[1]), b = op(in[0], in[2]);
      Truth second = lt(b, a);
      if (second != Truth::no) return make(second, a, b, "F(x,y) <= F(x,z) for y <= z");
      Value c = op(in[1], in[0]), d = op(in[2], in[0]);
      return make(lt(d, c), c, d, "F(y,x) <= F(z,x) for y <= z");
    }
    case Law::bounded_by_min: {
      Value a = op(in[0], in[1]);
      Value m = min(in[0], in[1]);
      return make(lt(m, a), a, m, "F(x,y) <= min(x,y)");
    }
    case Law::associativity: {
      Value xy = op(in[0], in[1]), yz = op(in[1], in[2]);
      Value a = apply_monotone(op, xy, in[2]), b = apply_monotone(op, in[0], yz);
      return make(!eq(a, b), a, b, "F(F(x,y),z) = F(x,F(y,z))");
    }
    case Law::neutral_one: {
      Value a = op(in[0], 1);
      return make(!eq(a, in[0]), a, in[0], "F(x,1) = x");
    }
    case Law::conditional_cancellation: {
      if (!(in[1] < in[2])) throw std::invalid_argument("cancellation instance needs y < z");
      Value a = op(in[0], in[1]), b = op(in[0], in[2]);
      return make(eq(a, b) && positive(a), a, b, "F(x,y) = F(x,z) > 0 implies y = z");
    }
    case Law::cancellation: {
      if (!(in[1] < in[2])) throw std::invalid_argument("cancellation instance needs y < z");
      if (in[0].is_zero()) return {};
      Value a = op(in[0], in[1]), b = op(in[0], in[2]);
      return make(eq(a, b), a, b, "F(x,y) = F(x,z) implies x = 0 or y = z");
    }
    case Law::strict_monotonicity: {
      if (!(in[1] < in[2])) throw std::invalid_argument("strict monotonicity instance needs y < z");
      if (in[0].is_zero()) return {};
      Value a = op(in[0], in[1]), b = op(in[0], in[2]);
      return make(!lt(a, b), a, b, "F(x,y) < F(x,z) for x > 0, y < z");
    }
    case Law::archimedean: {
      const Rational &x = in[0], &y = in[1];
      if (x.sign() <= 0 || x >= Rational(1) || y.sign() <= 0 || y >= Rational(1)) return {};
      auto seq = power_sequence(op, x, p.n_iter, y);
      const Value& last = seq.back();
      Truth below = lt(last, Value(y));
      if (below == Truth::yes) return {};
      bool fixed = seq.size() >= 2 && last.is_exact() && seq[seq.size() - 2] == last;
      if (fixed && below == Truth::no)
        return make(Truth::yes, last, y, "x^(n) < y for some n (power sequence fixed at " + last.str() + ")");
      return make(Truth::unknown, last, y,
                  "x^(n) < y for some n <= " + std::to_string(p.n_iter) + " (not witnessed)", false);
    }
  }
  return {};
}

}  // namespace subnorm
