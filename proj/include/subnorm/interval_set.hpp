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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subnorm/rational.hpp"

namespace subnorm {

struct Bound {
  Rational value;
  bool open = false;

  friend bool operator==(const Bound&, const Bound&) = default;
};

/**
 * Interval with rational endpoints and individual openness flags.
 *
 * Only non-empty intervals can be constructed; a degenerate interval is
 * always the closed point {a}, so (a,a), [a,a) and (a,a] are empty and
 * `make` returns nullopt for them.
 */
class Interval {
 public:
  static std::optional<Interval> make(Rational lo, bool lo_open, Rational hi, bool hi_open) {
    if (hi < lo) return std::nullopt;
    if (lo == hi && (lo_open || hi_open)) return std::nullopt;
    return Interval(std::move(lo), lo_open, std::move(hi), hi_open);
  }
  static Interval closed(Rational lo, Rational hi) { return *make(std::move(lo), false, std::move(hi), false); }
  static Interval point(const Rational& x) { return Interval(x, false, x, false); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }
  Bound lower() const { return {lo_, lo_open_}; }
  Bound upper() const { return {hi_, hi_open_}; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const {
    auto c1 = x <=> lo_;
    if (c1 < 0 || (c1 == 0 && lo_open_)) return false;
    auto c2 = x <=> hi_;
    return !(c2 > 0 || (c2 == 0 && hi_open_));
  }

  std::string str() const {
    if (is_point()) return "{" + lo_.str() + "}";
    return std::string(lo_open_ ? "(" : "[") + lo_.str() + "," + hi_.str() + (hi_open_ ? ")" : "]");
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval(Rational lo, bool lo_open, Rational hi, bool hi_open)
      : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {}

  Rational lo_, hi_;
  bool lo_open_, hi_open_;
};

/**
 * Finite union of intervals, kept sorted, pairwise disjoint, and with no
 * two mergeable neighbours. Two parts sharing an endpoint merge only when
 * that endpoint belongs to at least one of them, so [0,1/2)∪(1/2,1] keeps
 * 1/2 excluded.
 */
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(const Interval& i) : parts_{i} {}  // NOLINT(google-explicit-constructor)
  explicit IntervalSet(std::vector<Interval> parts) : parts_(normalize(std::move(parts))) {}

  static IntervalSet unit() { return IntervalSet(Interval::closed(0, 1)); }
  static IntervalSet point(const Rational& x) { return IntervalSet(Interval::point(x)); }
  static IntervalSet points(const std::vector<Rational>& xs) {
    std::vector<Interval> v;
    v.reserve(xs.size());
    for (const auto& x : xs) v.push_back(Interval::point(x));
    return IntervalSet(std::move(v));
  }
  static IntervalSet maybe(std::optional<Interval> i) { return i ? IntervalSet(*i) : IntervalSet(); }

  const std::vector<Interval>& parts() const& { return parts_; }
  std::vector<Interval> parts() && { return std::move(parts_); }
  bool empty() const { return parts_.empty(); }
  bool is_point() const { return parts_.size() == 1 && parts_[0].is_point(); }

  bool contains(const Rational& x) const {
    // First part whose upper end is not below x.
    auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                               [](const Interval& p, const Rational& v) { return p.hi() < v; });
    for (; it != parts_.end() && it->lo() <= x; ++it)
      if (it->contains(x)) return true;
    return false;
  }

  /// Infimum and supremum; precondition: non-empty.
  const Rational& inf() const { return parts_.front().lo(); }
  const Rational& sup() const { return parts_.back().hi(); }
  bool has_min() const { return !parts_.empty() && !parts_.front().lo_open(); }
  bool has_max() const { return !parts_.empty() && !parts_.back().hi_open(); }

  /// Complement relative to [0,1].
  IntervalSet complement() const {
    std::vector<Interval> out;
    Rational cursor(0);
    bool cursor_open = false;
    for (const auto& p : clip_unit().parts_) {
      if (auto gap = Interval::make(cursor, cursor_open, p.lo(), !p.lo_open())) out.push_back(*gap);
      cursor = p.hi();
      cursor_open = !p.hi_open();
    }
    if (auto gap = Interval::make(cursor, cursor_open, Rational(1), false)) out.push_back(*gap);
    return IntervalSet(std::move(out));
  }

  IntervalSet clip_unit() const {
    std::vector<Interval> out;
    for (const auto& p : parts_) {
      bool lo_clip = p.lo().sign() < 0, hi_clip = p.hi() > Rational(1);
      auto i = Interval::make(lo_clip ? Rational(0) : p.lo(), lo_clip ? false : p.lo_open(),
                              hi_clip ? Rational(1) : p.hi(), hi_clip ? false : p.hi_open());
      if (i) out.push_back(*i);
    }
    return IntervalSet(std::move(out));
  }

  /// Rendering such as `[1/4,5/16]∪(7/16,1/2)∪{3/4}`; the empty set is `∅`.
  std::string str() const {
    if (parts_.empty()) return "∅";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += "∪";
      s += parts_[i].str();
    }
    return s;
  }

  /// Accepts the rendering above; parts may also be separated by `,`, `U` or
  /// whitespace, and `{a,b,...}` lists isolated points.
  static IntervalSet parse(std::string_view text) {
    std::vector<Interval> parts;
    std::size_t i = 0;
    auto skip_sep = [&] {
      for (;;) {
        if (i >= text.size()) return;
        if (text.compare(i, 3, "∪") == 0) { i += 3; continue; }
        if (text.compare(i, 3, "∅") == 0) { i += 3; continue; }
        char c = text[i];
        if (c == ' ' || c == '\t' || c == ',' || c == 'U') { ++i; continue; }
        return;
      }
    };
    skip_sep();
    while (i < text.size()) {
      char open = text[i];
      char close = open == '[' || open == '(' ? 0 : open == '{' ? '}' : '\1';
      if (close == '\1') throw ParseError("unexpected character in interval set: '" + std::string(text.substr(i)) + "'");
      std::size_t end = text.find_first_of(close ? "}" : ")]", i + 1);
      if (end == std::string_view::npos) throw ParseError("unterminated interval: " + std::string(text.substr(i)));
      std::string_view body = text.substr(i + 1, end - i - 1);
      if (open == '{') {
        std::size_t s = 0;
        while (s <= body.size()) {
          std::size_t comma = body.find(',', s);
          auto tok = body.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
          if (tok.find_first_not_of(" \t") != std::string_view::npos) parts.push_back(Interval::point(Rational::parse(tok)));
          if (comma == std::string_view::npos) break;
          s = comma + 1;
        }
      } else {
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw ParseError("interval needs two endpoints: " + std::string(body));
        auto lo = Rational::parse(body.substr(0, comma));
        auto hi = Rational::parse(body.substr(comma + 1));
        auto iv = Interval::make(lo, open == '(', hi, text[end] == ')');
        if (!iv) throw ParseError("empty or reversed interval: " + std::string(text.substr(i, end - i + 1)));
        parts.push_back(*iv);
      }
      i = end + 1;
      skip_sep();
    }
    return IntervalSet(std::move(parts));
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  /// Sort and merge; exposed for property tests of idempotence.
  static std::vector<Interval> normalize(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
      if (a.lo() != b.lo()) return a.lo() < b.lo();
      return !a.lo_open() && b.lo_open();
    });
    std::vector<Interval> out;
    for (auto& p : v) {
      if (!out.empty()) {
        auto& cur = out.back();
        auto c = p.lo() <=> cur.hi();
        bool touches = c < 0 || (c == 0 && (!p.lo_open() || !cur.hi_open()));
        if (touches) {
          auto hc = p.hi() <=> cur.hi();
          if (hc > 0 || (hc == 0 && !p.hi_open() && cur.hi_open()))
            cur = *Interval::make(cur.lo(), cur.lo_open(), p.hi(), p.hi_open());
          continue;
        }
      }
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  std::vector<Interval> parts_;
};

inline IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> v(a.parts());
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return IntervalSet(std::move(v));
}

inline IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  while (i < pa.size() && j < pb.size()) {
    const auto& x = pa[i];
    const auto& y = pb[j];
    // Larger lower bound, smaller upper bound; open wins on ties.
    auto lc = x.lo() <=> y.lo();
    const Rational& lo = lc >= 0 ? x.lo() : y.lo();
    bool lo_open = lc > 0 ? x.lo_open() : lc < 0 ? y.lo_open() : (x.lo_open() || y.lo_open());
    auto hc = x.hi() <=> y.hi();
    const Rational& hi = hc <= 0 ? x.hi() : y.hi();
    bool hi_open = hc < 0 ? x.hi_open() : hc > 0 ? y.hi_open() : (x.hi_open() || y.hi_open());
    if (auto iv = Interval::make(lo, lo_open, hi, hi_open)) out.push_back(*iv);
    // Advance whichever part ends first (the one that cannot meet later parts).
    if (hc < 0 || (hc == 0 && x.hi_open() && !y.hi_open())) ++i;
    else if (hc > 0 || (hc == 0 && y.hi_open() && !x.hi_open())) ++j;
    else { ++i; ++j; }
  }
  return IntervalSet(std::move(out));
}

/// a ∖ b; all sets in this library live inside [0,1].
inline IntervalSet set_minus(const IntervalSet& a, const IntervalSet& b) {
  return set_intersect(a, b.complement());
}

/// Outcome of an inclusion test. On failure the witness is the least
/// violating point of a∖b when one exists (closed lower end of the first
/// violating part), else that part's midpoint.
struct SubsetCheck {
  bool holds = true;
  std::optional<Rational> witness;
  explicit operator bool() const { return holds; }
};

inline std::optional<Rational> pick_point(const IntervalSet& s) {
  if (s.empty()) return std::nullopt;
  const auto& p = s.parts().front();
  if (!p.lo_open()) return p.lo();
  return midpoint(p.lo(), p.hi());
}

inline SubsetCheck is_subset(const IntervalSet& a, const IntervalSet& b) {
  auto diff = set_minus(a, b);
  if (diff.empty()) return {};
  return {false, pick_point(diff)};
}

/// Union of the open intervals between all pairs of points of s: the open
/// hull (inf s, sup s) when s holds at least two points, otherwise empty.
inline IntervalSet o_hull(const IntervalSet& s) {
  if (s.empty() || s.is_point()) return {};
  return IntervalSet::maybe(Interval::make(s.inf(), true, s.sup(), true));
}

}  // namespace subnorm
