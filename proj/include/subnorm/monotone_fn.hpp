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
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subnorm/interval_set.hpp"
#include "subnorm/rational.hpp"

namespace subnorm {

enum class Direction { non_decreasing, non_increasing };

inline std::string_view to_string(Direction d) {
  return d == Direction::non_decreasing ? "nondecreasing" : "nonincreasing";
}

enum class Side { left, right };

/// A piece of a function: an affine or constant formula on an interval
/// domain. Isolated point values are stored as constant pieces whose domain
/// is a single point.
struct Segment {
  enum class Shape { linear, constant };

  Interval domain;
  Shape shape;
  Rational slope;      // zero for constants
  Rational intercept;  // the value for constants

  static Segment linear(Interval dom, Rational slope, Rational intercept) {
    if (slope.is_zero()) return constant(std::move(dom), std::move(intercept));
    return {std::move(dom), Shape::linear, std::move(slope), std::move(intercept)};
  }
  static Segment constant(Interval dom, Rational value) {
    return {std::move(dom), Shape::constant, Rational(0), std::move(value)};
  }
  static Segment point(const Rational& x, Rational value) { return constant(Interval::point(x), std::move(value)); }

  /// Formula value, also used at excluded endpoints as the one-sided limit.
  Rational at(const Rational& x) const { return shape == Shape::constant ? intercept : slope * x + intercept; }
  bool is_point() const { return domain.is_point(); }
  bool same_formula(const Segment& o) const {
    return shape == o.shape && slope == o.slope && intercept == o.intercept;
  }

  /// Exact image of the domain.
  Interval image() const {
    if (shape == Shape::constant || is_point()) return Interval::point(at(domain.lo()));
    if (slope.sign() > 0)
      return *Interval::make(at(domain.lo()), domain.lo_open(), at(domain.hi()), domain.hi_open());
    return *Interval::make(at(domain.hi()), domain.hi_open(), at(domain.lo()), domain.lo_open());
  }

  /// {x in domain : at(x) < y} (strict_less) or {x in domain : at(x) > y}.
  IntervalSet where(const Rational& y, bool strict_less) const {
    if (shape == Shape::constant || is_point()) {
      const Rational v = at(domain.lo());
      bool keep = strict_less ? v < y : v > y;
      return keep ? IntervalSet(domain) : IntervalSet();
    }
    Rational cut = (y - intercept) / slope;
    // at(x) < y  <=>  x < cut for increasing formulas.
    bool below = (slope.sign() > 0) == strict_less;
    if (below) {
      bool clip = cut <= domain.hi();
      return IntervalSet::maybe(Interval::make(domain.lo(), domain.lo_open(), clip ? cut : domain.hi(),
                                               clip ? true : domain.hi_open()));
    }
    bool clip = cut >= domain.lo();
    return IntervalSet::maybe(Interval::make(clip ? cut : domain.lo(), clip ? true : domain.lo_open(), domain.hi(),
                                             domain.hi_open()));
  }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/**
 * Monotone function [0,1] -> [0,1] given by finitely many rational affine or
 * constant pieces plus isolated point values.
 *
 * The pieces partition [0,1] exactly and the whole function is monotone in
 * the declared direction; both are checked on construction.
 */
class PiecewiseMonotoneFn {
 public:
  class InvalidFunction : public ParseError {
   public:
    using ParseError::ParseError;
  };

  PiecewiseMonotoneFn(Direction dir, std::vector<Segment> pieces) : dir_(dir), pieces_(std::move(pieces)) {
    std::sort(pieces_.begin(), pieces_.end(), [](const Segment& a, const Segment& b) {
      if (a.domain.lo() != b.domain.lo()) return a.domain.lo() < b.domain.lo();
      return !a.domain.lo_open() && b.domain.lo_open();
    });
    validate();
  }

  PiecewiseMonotoneFn(Direction dir, std::vector<Segment> segments, const std::map<Rational, Rational>& points)
      : PiecewiseMonotoneFn(dir, merge_points(std::move(segments), points)) {}

  static PiecewiseMonotoneFn identity() {
    return PiecewiseMonotoneFn(Direction::non_decreasing, {Segment::linear(Interval::closed(0, 1), 1, 0)});
  }

  Direction direction() const { return dir_; }
  bool non_decreasing() const { return dir_ == Direction::non_decreasing; }
  const std::vector<Segment>& pieces() const { return pieces_; }

  Rational operator()(const Rational& x) const { return piece_at(x).at(x); }

  const Segment& piece_at(const Rational& x) const {
    require_unit(x);
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& v, const Segment& s) { return v < s.domain.lo(); });
    // Candidate is the last piece starting at or before x; open lower ends
    // sharing x with a point piece sort after it.
    while (it != pieces_.begin()) {
      --it;
      if (it->domain.contains(x)) return *it;
    }
    throw DomainError("no piece covers " + x.str());
  }

  /// One-sided limit f(a-) or f(a+), with f(0-) and f(1+) fixed by the
  /// direction convention (0 and 1 for non-decreasing, 1 and 0 otherwise).
  Rational side_limit(const Rational& a, Side side) const {
    require_unit(a);
    if (side == Side::left && a.is_zero()) return non_decreasing() ? Rational(0) : Rational(1);
    if (side == Side::right && a == Rational(1)) return non_decreasing() ? Rational(1) : Rational(0);
    for (const auto& s : pieces_) {
      if (s.is_point()) continue;
      bool hit = side == Side::left ? (s.domain.lo() < a && a <= s.domain.hi())
                                    : (s.domain.lo() <= a && a < s.domain.hi());
      if (hit) return s.at(a);
    }
    throw DomainError("no piece adjoins " + a.str());
  }

  /// Distinct domain endpoints, ascending; always contains 0 and 1.
  std::vector<Rational> breakpoints() const {
    std::vector<Rational> out;
    for (const auto& s : pieces_) {
      out.push_back(s.domain.lo());
      out.push_back(s.domain.hi());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Ran(f), exactly.
  IntervalSet range() const {
    std::vector<Interval> parts;
    parts.reserve(pieces_.size());
    for (const auto& s : pieces_) parts.push_back(s.image());
    return IntervalSet(std::move(parts));
  }

  /// Values attained at two or more arguments: values of non-degenerate
  /// constant pieces plus values shared by two different pieces.
  IntervalSet plateau_set() const {
    std::vector<Interval> parts;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto& s = pieces_[i];
      if (s.shape == Segment::Shape::constant && !s.is_point()) parts.push_back(Interval::point(s.intercept));
      for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
        auto common = set_intersect(IntervalSet(s.image()), IntervalSet(pieces_[j].image()));
        parts.insert(parts.end(), common.parts().begin(), common.parts().end());
      }
    }
    return IntervalSet(std::move(parts));
  }

  /// {x : f(x) = v}.
  IntervalSet level_set(const Rational& v) const {
    std::vector<Interval> parts;
    for (const auto& s : pieces_) {
      if (s.shape == Segment::Shape::constant || s.is_point()) {
        if (s.at(s.domain.lo()) == v) parts.push_back(s.domain);
      } else {
        Rational x = (v - s.intercept) / s.slope;
        if (s.domain.contains(x)) parts.push_back(Interval::point(x));
      }
    }
    return IntervalSet(std::move(parts));
  }

  /// Some argument x with f(x) = v: the least one when it exists, otherwise
  /// the midpoint of the first piece of the level set.
  std::optional<Rational> preimage(const Rational& v) const { return pick_point(level_set(v)); }

  bool strictly_monotone() const { return plateau_set().empty(); }

  bool right_continuous() const {
    for (const auto& a : breakpoints())
      if (a < Rational(1) && (*this)(a) != side_limit(a, Side::right)) return false;
    return true;
  }

  bool continuous() const {
    for (const auto& a : breakpoints()) {
      if (a.sign() > 0 && (*this)(a) != side_limit(a, Side::left)) return false;
      if (a < Rational(1) && (*this)(a) != side_limit(a, Side::right)) return false;
    }
    return true;
  }

  /// Text form accepted by `parse`.
  std::string render() const {
    std::string out = "monotone: " + std::string(to_string(dir_)) + "\n";
    for (const auto& s : pieces_) {
      if (s.is_point()) {
        out += "point " + s.domain.lo().str() + " = " + s.at(s.domain.lo()).str() + "\n";
      } else if (s.shape == Segment::Shape::constant) {
        out += "segment " + s.domain.str() + " const " + s.intercept.str() + "\n";
      } else {
        out += "segment " + s.domain.str() + " linear " + s.slope.str() + " " + s.intercept.str() + "\n";
      }
    }
    return out;
  }

  /**
   * Parses the line-oriented function format:
   *
   *     monotone: nondecreasing|nonincreasing
   *     segment <interval> linear <slope> <intercept>
   *     segment <interval> const <value>
   *     point <x> = <value>
   *
   * `#` starts a comment. Errors carry the 1-based line number.
   */
  static PiecewiseMonotoneFn parse(std::string_view text) {
    std::optional<Direction> dir;
    std::vector<Segment> pieces;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head)) continue;
      auto fail = [&](const std::string& msg) -> ParseError { return ParseError("line " + std::to_string(lineno) + ": " + msg); };
      try {
        if (head == "monotone:" || head == "monotone") {
          std::string d;
          ls >> d;
          if (head == "monotone" && d == ":") ls >> d;
          if (d == "nondecreasing") dir = Direction::non_decreasing;
          else if (d == "nonincreasing") dir = Direction::non_increasing;
          else throw fail("unknown direction '" + d + "'");
        } else if (head == "segment") {
          std::string rest;
          std::getline(ls, rest);
          auto close = rest.find_first_of(")]}");
          if (close == std::string::npos) throw fail("missing interval");
          auto dom = IntervalSet::parse(rest.substr(0, close + 1));
          if (dom.parts().size() != 1) throw fail("segment domain must be a single interval");
          std::istringstream ks(rest.substr(close + 1));
          std::string kind, a, b, extra;
          ks >> kind >> a;
          if (kind == "linear") {
            ks >> b;
            if (a.empty() || b.empty()) throw fail("linear needs slope and intercept");
            Rational slope = Rational::parse(a), icpt = Rational::parse(b);
            if (slope.is_zero()) throw fail("linear slope must be non-zero");
            const auto& iv = dom.parts()[0];
            pieces.push_back(iv.is_point() ? Segment::point(iv.lo(), slope * iv.lo() + icpt)
                                           : Segment::linear(iv, slope, icpt));
          } else if (kind == "const") {
            if (a.empty()) throw fail("const needs a value");
            pieces.push_back(Segment::constant(dom.parts()[0], Rational::parse(a)));
          } else {
            throw fail("unknown segment kind '" + kind + "'");
          }
          if (ks >> extra) throw fail("trailing text '" + extra + "'");
        } else if (head == "point") {
          std::string rest;
          std::getline(ls, rest);
          auto eq = rest.find('=');
          if (eq == std::string::npos) throw fail("point needs '<x> = <value>'");
          pieces.push_back(Segment::point(Rational::parse(rest.substr(0, eq)), Rational::parse(rest.substr(eq + 1))));
        } else {
          throw fail("unknown directive '" + head + "'");
        }
      } catch (const InvalidFunction&) {
        throw;
      } catch (const ParseError& e) {
        std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) throw;
        throw fail(msg);
      }
    }
    if (!dir) throw ParseError("missing 'monotone:' directive");
    return PiecewiseMonotoneFn(*dir, std::move(pieces));
  }

  friend bool operator==(const PiecewiseMonotoneFn&, const PiecewiseMonotoneFn&) = default;

 private:
  static std::vector<Segment> merge_points(std::vector<Segment> segs, const std::map<Rational, Rational>& points) {
    for (const auto& [x, v] : points) segs.push_back(Segment::point(x, v));
    return segs;
  }

  void validate() const {
    auto bad = [](const std::string& m) { return InvalidFunction("invalid function: " + m); };
    if (pieces_.empty()) throw bad("no pieces");
    const auto& first = pieces_.front().domain;
    if (!first.lo().is_zero() || first.lo_open()) throw bad("domain must start at 0 (closed)");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
      const auto& a = pieces_[i].domain;
      const auto& b = pieces_[i + 1].domain;
      if (a.hi() != b.lo() || a.hi_open() == b.lo_open())
        throw bad("pieces " + a.str() + " and " + b.str() + " do not tile [0,1]");
    }
    const auto& last = pieces_.back().domain;
    if (last.hi() != Rational(1) || last.hi_open()) throw bad("domain must end at 1 (closed)");
    bool inc = non_decreasing();
    for (const auto& s : pieces_) {
      for (const auto& e : {s.domain.lo(), s.domain.hi()})
        if (!in_unit(s.at(e))) throw bad("value " + s.at(e).str() + " at " + e.str() + " outside [0,1]");
      if (s.shape == Segment::Shape::linear && !s.is_point() && (s.slope.sign() > 0) != inc)
        throw bad("slope of " + s.domain.str() + " contradicts the declared direction");
    }
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
      const Rational& x = pieces_[i].domain.hi();
      Rational left = pieces_[i].at(x), right = pieces_[i + 1].at(x);
      if (inc ? right < left : left < right)
        throw bad("not monotone at " + x.str() + " (" + left.str() + " then " + right.str() + ")");
    }
  }

  Direction dir_;
  std::vector<Segment> pieces_;
};

/// Direct evaluation of the pseudo-inverse at y: sup{x : f(x) < y} for
/// non-decreasing f, sup{x : f(x) > y} for non-increasing f, with sup of the
/// empty set taken as 0.
inline Rational pseudo_inverse_at(const PiecewiseMonotoneFn& f, const Rational& y) {
  std::optional<Rational> best;
  for (const auto& s : f.pieces()) {
    auto part = s.where(y, f.non_decreasing());
    if (!part.empty() && (!best || *best < part.sup())) best = part.sup();
  }
  return best ? *best : Rational(0);
}

/// Closed-form pseudo-inverse as another piecewise monotone function.
///
/// Between consecutive critical values (0, 1, and every piece's endpoint
/// values) the pseudo-inverse is affine, so it is fitted exactly from two
/// interior evaluations; critical values get their own point pieces, and
/// compatible neighbours are merged afterwards.
inline PiecewiseMonotoneFn pseudo_inverse(const PiecewiseMonotoneFn& f) {
  std::vector<Rational> ys{Rational(0), Rational(1)};
  for (const auto& s : f.pieces()) {
    ys.push_back(s.at(s.domain.lo()));
    ys.push_back(s.at(s.domain.hi()));
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<Segment> raw;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    raw.push_back(Segment::point(ys[i], pseudo_inverse_at(f, ys[i])));
    if (i + 1 == ys.size()) break;
    const Rational width = ys[i + 1] - ys[i];
    const Rational t1 = ys[i] + width / Rational(3), t2 = ys[i] + width * Rational(2, 3);
    const Rational v1 = pseudo_inverse_at(f, t1), v2 = pseudo_inverse_at(f, t2);
    const Rational slope = (v2 - v1) / (t2 - t1);
    raw.push_back(Segment::linear(*Interval::make(ys[i], true, ys[i + 1], true), slope, v1 - slope * t1));
  }

  // Merge neighbours that share a formula; a point joins a segment whose
  // formula reproduces its value.
  std::vector<Segment> merged;
  for (auto& s : raw) {
    if (!merged.empty()) {
      auto& cur = merged.back();
      const Rational& joint = s.domain.lo();
      bool adjacent = cur.domain.hi() == joint && cur.domain.hi_open() != s.domain.lo_open();
      bool compatible = false;
      Segment shape = cur;
      if (adjacent) {
        if (cur.is_point() && !s.is_point()) {
          compatible = s.at(joint) == cur.at(joint);
          shape = s;
        } else if (s.is_point() && !cur.is_point()) {
          compatible = cur.at(joint) == s.at(joint);
        } else if (!s.is_point() && !cur.is_point()) {
          compatible = cur.same_formula(s);
        }
      }
      if (compatible) {
        auto dom = *Interval::make(cur.domain.lo(), cur.domain.lo_open(), s.domain.hi(), s.domain.hi_open());
        cur = shape.shape == Segment::Shape::constant ? Segment::constant(dom, shape.intercept)
                                                      : Segment::linear(dom, shape.slope, shape.intercept);
        continue;
      }
    }
    merged.push_back(std::move(s));
  }
  return PiecewiseMonotoneFn(f.direction(), std::move(merged));
}

}  // namespace subnorm
