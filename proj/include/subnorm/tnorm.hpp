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
#include <string_view>
#include <vector>

#include "subnorm/generator.hpp"
#include "subnorm/interval_set.hpp"
#include "subnorm/rational.hpp"
#include "subnorm/value.hpp"

namespace subnorm {

enum class Family { product, minimum, hamacher2, halfprod, additive_generator, lambda_construction };

struct TNormFlags {
  bool strictly_monotone = false;
  bool continuous = false;
  bool exact = false;

  friend bool operator==(const TNormFlags&, const TNormFlags&) = default;
};

/**
 * A t-norm family (or t-subnorm-like operation) with capability flags.
 *
 * Exact families additionally expose exact interval images, one-variable
 * solves and slice preimages, which drive the classifier's set conditions.
 */
class TNorm {
 public:
  static TNorm product() { return TNorm(Family::product, {true, true, true}); }
  static TNorm minimum() { return TNorm(Family::minimum, {false, true, true}); }
  static TNorm hamacher2() { return TNorm(Family::hamacher2, {true, true, true}); }
  static TNorm halfprod() { return TNorm(Family::halfprod, {true, false, true}); }
  static TNorm generator(GeneratorSpec g) {
    TNorm t(Family::additive_generator, {true, true, false});
    t.gen_ = g;
    return t;
  }
  static TNorm lambda(GeneratorSpec g, Rational lambda) {
    if (lambda.sign() <= 0 || lambda >= Rational(1))
      throw DomainError("parameter error: lambda " + lambda.str() + " not in (0,1)");
    TNorm t(Family::lambda_construction, {false, false, false});
    t.gen_ = g;
    t.lambda_ = lambda;
    t.flags_.strictly_monotone = LambdaGenerator{g, lambda}.positive_below_one();
    return t;
  }

  /// `product`, `min`, `hamacher2`, `halfprod`, `gen:<g>`, `lambda:<g>:<p/q>`.
  static TNorm parse(std::string_view text) {
    std::string s(text);
    if (s == "product") return product();
    if (s == "min" || s == "minimum") return minimum();
    if (s == "hamacher2") return hamacher2();
    if (s == "halfprod") return halfprod();
    if (s.rfind("gen:", 0) == 0) return generator(GeneratorSpec::parse(s.substr(4)));
    if (s.rfind("lambda:", 0) == 0) {
      auto rest = s.substr(7);
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError("expected lambda:<gen>:<p/q>, got '" + s + "'");
      return lambda(GeneratorSpec::parse(rest.substr(0, colon)), Rational::parse(rest.substr(colon + 1)));
    }
    throw ParseError("unknown t-norm '" + s + "'");
  }

  std::string name() const {
    switch (family_) {
      case Family::product: return "product";
      case Family::minimum: return "min";
      case Family::hamacher2: return "hamacher2";
      case Family::halfprod: return "halfprod";
      case Family::additive_generator: return "gen:" + gen_->name();
      case Family::lambda_construction: return "lambda:" + gen_->name() + ":" + lambda_->str();
    }
    return {};
  }

  Family family() const { return family_; }
  const TNormFlags& flags() const { return flags_; }
  bool exact() const { return flags_.exact; }
  bool strict() const { return flags_.continuous && flags_.strictly_monotone; }
  /// T(x,1) = x for all x.
  bool neutral_one() const {
    return !(family_ == Family::additive_generator && gen_->at_one().sign() > 0);
  }
  const std::optional<GeneratorSpec>& generator_spec() const { return gen_; }
  const std::optional<Rational>& lambda_value() const { return lambda_; }

  Value operator()(const Rational& x, const Rational& y) const {
    require_unit(x, "x");
    require_unit(y, "y");
    switch (family_) {
      case Family::additive_generator: return gen_->combine(x, y);
      case Family::lambda_construction: return LambdaGenerator{*gen_, *lambda_}.combine(x, y);
      default: return exact_unchecked(x, y);
    }
  }

  /// Exact value; only for exact families.
  Rational exact(const Rational& x, const Rational& y) const {
    require_exact();
    require_unit(x, "x");
    require_unit(y, "y");
    return exact_unchecked(x, y);
  }

  BinaryOp as_op() const {
    TNorm self = *this;
    return {name(), [self](const Rational& x, const Rational& y) { return self(x, y); }, exact()};
  }

  /// Parts of s, each split at the family's branch boundary (1/2 for halfprod).
  std::vector<Interval> branch_parts(const IntervalSet& s) const {
    std::vector<Interval> out;
    const Rational half(1, 2);
    for (const auto& p : s.parts()) {
      if (family_ == Family::halfprod && p.contains(half) && half < p.hi()) {
        out.push_back(*Interval::make(p.lo(), p.lo_open(), half, false));
        out.push_back(*Interval::make(half, true, p.hi(), p.hi_open()));
      } else {
        out.push_back(p);
      }
    }
    return out;
  }

  /// Exact image T(A×B) of two intervals.
  IntervalSet image(const Interval& a, const Interval& b) const {
    require_exact();
    if (family_ == Family::minimum) return min_image(a, b);
    if (family_ != Family::halfprod) return rect_image(family_, a, b);
    std::vector<Interval> parts;
    for (const auto& pa : branch_parts(IntervalSet(a)))
      for (const auto& pb : branch_parts(IntervalSet(b))) {
        bool low = pa.hi() <= Rational(1, 2) && pb.hi() <= Rational(1, 2);
        auto img = rect_image(low ? Family::halfprod : Family::product, pa, pb);
        parts.insert(parts.end(), img.parts().begin(), img.parts().end());
      }
    return IntervalSet(std::move(parts));
  }

  /// Exact image T(A×B) of two interval sets.
  IntervalSet image(const IntervalSet& a, const IntervalSet& b) const {
    std::vector<Interval> parts;
    for (const auto& pa : a.parts())
      for (const auto& pb : b.parts()) {
        auto img = image(pa, pb);
        parts.insert(parts.end(), img.parts().begin(), img.parts().end());
      }
    return IntervalSet(std::move(parts));
  }

  /// Some y ∈ [0,1] with T(x,y) = z, if one exists.
  std::optional<Rational> solve(const Rational& x, const Rational& z) const {
    require_exact();
    if (z.is_zero()) return Rational(0);
    if (x.is_zero()) return std::nullopt;
    std::optional<Rational> y;
    switch (family_) {
      case Family::product: y = z / x; break;
      case Family::hamacher2: y = inverse_in_second(Family::hamacher2, x, z); break;
      case Family::minimum:
        if (z <= x) y = z;
        break;
      case Family::halfprod: {
        if (x <= Rational(1, 2)) {
          Rational c = Rational(2) * z / x;
          if (c <= Rational(1, 2) && exact_unchecked(x, c) == z) return c;
        }
        Rational c = z / x;
        if (in_unit(c) && exact_unchecked(x, c) == z) return c;
        return std::nullopt;
      }
      default: break;
    }
    if (!y || !in_unit(*y) || exact_unchecked(x, *y) != z) return std::nullopt;
    return y;
  }

  /// {u ∈ [0,1] : T(u,y) ∈ target}.
  IntervalSet slice_preimage(const Rational& y, const IntervalSet& target) const {
    require_exact();
    if (y.is_zero()) return target.contains(0) ? IntervalSet::unit() : IntervalSet();
    if (family_ == Family::minimum) {
      auto below = set_intersect(target, IntervalSet::maybe(Interval::make(0, false, y, true)));
      return target.contains(y) ? set_union(below, IntervalSet(Interval::closed(y, 1))) : below;
    }
    std::vector<std::pair<Interval, Family>> branches;
    if (family_ == Family::halfprod) {
      if (y <= Rational(1, 2)) {
        branches.push_back({Interval::closed(0, Rational(1, 2)), Family::halfprod});
        branches.push_back({*Interval::make(Rational(1, 2), true, 1, false), Family::product});
      } else {
        branches.push_back({Interval::closed(0, 1), Family::product});
      }
    } else {
      branches.push_back({Interval::closed(0, 1), family_});
    }
    std::vector<Interval> out;
    for (const auto& [dom, fam] : branches)
      for (const auto& p : target.parts()) {
        auto span = Interval::make(inverse_in_second(fam, y, p.lo()), p.lo_open(), inverse_in_second(fam, y, p.hi()),
                                   p.hi_open());
        if (!span) continue;
        auto piece = set_intersect(IntervalSet(dom), IntervalSet(*span));
        out.insert(out.end(), piece.parts().begin(), piece.parts().end());
      }
    return IntervalSet(std::move(out));
  }

  /// Whether T restricted to s×s is continuous.
  bool continuous_on(const IntervalSet& s) const {
    if (flags_.continuous || s.empty()) return true;
    if (family_ == Family::lambda_construction) return s.sup() < Rational(1);
    if (family_ == Family::halfprod) {
      bool low = s.sup() <= Rational(1, 2);
      bool high = set_intersect(s, IntervalSet(*Interval::make(0, true, Rational(1, 2), false))).empty();
      return low || high;
    }
    return false;
  }

  friend bool operator==(const TNorm&, const TNorm&) = default;

 private:
  TNorm(Family f, TNormFlags flags) : family_(f), flags_(flags) {}

  void require_exact() const {
    if (!exact()) throw std::logic_error(name() + " has no exact rational evaluation");
  }

  /// Formula of a continuous, strictly increasing branch.
  static Rational formula(Family f, const Rational& x, const Rational& y) {
    switch (f) {
      case Family::product: return x * y;
      case Family::halfprod: return x * y / Rational(2);
      case Family::hamacher2: {
        Rational xy = x * y;
        return xy.is_zero() ? Rational(0) : xy / (Rational(2) - (x + y - xy));
      }
      default: throw std::logic_error("no branch formula");
    }
  }

  /// u with formula(u, y) = v for y > 0; extended beyond [0,1] where the
  /// formula's inverse is still increasing.
  static Rational inverse_in_second(Family f, const Rational& y, const Rational& v) {
    switch (f) {
      case Family::product: return v / y;
      case Family::halfprod: return Rational(2) * v / y;
      case Family::hamacher2: {
        if (v.is_zero()) return 0;
        return v * (Rational(2) - y) / (y + v - v * y);
      }
      default: throw std::logic_error("no branch inverse");
    }
  }

  Rational exact_unchecked(const Rational& x, const Rational& y) const {
    switch (family_) {
      case Family::minimum: return min(x, y);
      case Family::halfprod: {
        bool low = x <= Rational(1, 2) && y <= Rational(1, 2);
        return formula(low ? Family::halfprod : Family::product, x, y);
      }
      default: return formula(family_, x, y);
    }
  }

  static bool attained(const Rational& a, bool a_open, const Rational& b, bool b_open) {
    return (!a_open && !b_open) || (a.is_zero() && !a_open) || (b.is_zero() && !b_open);
  }

  static IntervalSet rect_image(Family f, const Interval& a, const Interval& b) {
    Rational lo = formula(f, a.lo(), b.lo()), hi = formula(f, a.hi(), b.hi());
    bool lo_att = attained(a.lo(), a.lo_open(), b.lo(), b.lo_open());
    bool hi_att = attained(a.hi(), a.hi_open(), b.hi(), b.hi_open());
    return IntervalSet::maybe(Interval::make(lo, !lo_att, hi, !hi_att));
  }

  static IntervalSet min_image(const Interval& a, const Interval& b) {
    auto lc = a.lo() <=> b.lo();
    bool lo_att = lc < 0 ? !a.lo_open() : lc > 0 ? !b.lo_open() : (!a.lo_open() || !b.lo_open());
    auto hc = a.hi() <=> b.hi();
    bool hi_att = hc < 0 ? !a.hi_open() : hc > 0 ? !b.hi_open() : (!a.hi_open() && !b.hi_open());
    return IntervalSet::maybe(Interval::make(min(a.lo(), b.lo()), !lo_att, min(a.hi(), b.hi()), !hi_att));
  }

  Family family_;
  TNormFlags flags_;
  std::optional<GeneratorSpec> gen_;
  std::optional<Rational> lambda_;
};

/// Left-associated power x_T^(n).
inline Value t_power(const TNorm& t, const Rational& x, int n) {
  if (n < 1) throw DomainError("power must be positive");
  auto op = t.as_op();
  Value p = x;
  for (int i = 1; i < n; ++i) p = apply_monotone(op, p, x);
  return p;
}

inline TNorm generator_tnorm(GeneratorSpec g) { return TNorm::generator(g); }

}  // namespace subnorm
