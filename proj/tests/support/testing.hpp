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
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subnorm/subnorm.hpp"

namespace subnorm::testing {

inline std::string samples_dir() { return SUBNORM_SAMPLES_DIR; }
inline std::string golden_dir() { return SUBNORM_GOLDEN_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PiecewiseMonotoneFn sample(const std::string& name) {
  return PiecewiseMonotoneFn::parse(read_file(samples_dir() + "/" + name + ".fn"));
}

/// Simplest rational (least denominator) in the closed interval [lo, hi],
/// 0 ≤ lo ≤ hi, by continued-fraction descent.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.gmp().get_num_mpz_t(), lo.gmp().get_den_mpz_t());
  Rational f(mpq_class(fl, 1));
  if (f == lo) return lo;
  if (f + Rational(1) <= hi) return f + Rational(1);
  return f + Rational(1) / simplest_between(Rational(1) / (hi - f), Rational(1) / (lo - f));
}

/// sup{x ∈ [0,1] : f(x) < y} (non-decreasing f) or sup{x : f(x) > y}
/// (non-increasing f), sup ∅ = 0, by exact dyadic bisection followed by the
/// simplest rational in the final bracket.
inline Rational bisect_pseudo_inverse(const PiecewiseMonotoneFn& f, const Rational& y, int steps = 90) {
  auto in_set = [&](const Rational& x) { return f.non_decreasing() ? f(x) < y : f(x) > y; };
  if (in_set(1)) return 1;
  if (!in_set(0)) return 0;
  Rational lo(0), hi(1);
  for (int i = 0; i < steps; ++i) {
    Rational mid = midpoint(lo, hi);
    if (in_set(mid)) lo = mid;
    else hi = mid;
  }
  return simplest_between(lo, hi);
}

/// Rational with denominator in [1, max_den] uniformly in [0,1].
inline Rational random_unit(std::mt19937_64& rng, int max_den = 16) {
  std::uniform_int_distribution<int> dd(1, max_den);
  int q = dd(rng);
  std::uniform_int_distribution<int> nd(0, q);
  return Rational(nd(rng), q);
}

struct RandomFnOptions {
  int max_segments = 6;
  int max_den = 16;
  bool right_continuous = false;
  bool strictly_increasing = false;
  bool continuous = false;
  bool zero_at_zero = false;
  Direction direction = Direction::non_decreasing;
};

/// Random piecewise-linear monotone function: breakpoints and piece-end
/// values with denominators ≤ max_den, random endpoint ownership, jumps,
/// constant pieces and isolated points.
inline PiecewiseMonotoneFn random_fn(std::mt19937_64& rng, RandomFnOptions o = {}) {
  std::uniform_int_distribution<int> nseg(1, o.max_segments);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    int k = nseg(rng);
    std::set<Rational> cuts{Rational(0), Rational(1)};
    for (int tries = 0; static_cast<int>(cuts.size()) < k + 1 && tries < 100; ++tries) cuts.insert(random_unit(rng, o.max_den));
    std::vector<Rational> p(cuts.begin(), cuts.end());
    k = static_cast<int>(p.size()) - 1;
    // 2k ascending values: piece i runs from v[2i] to v[2i+1].
    std::vector<Rational> v;
    for (int i = 0; i < 2 * k; ++i) v.push_back(random_unit(rng, o.max_den));
    std::sort(v.begin(), v.end());
    if (o.zero_at_zero) v[0] = 0;
    if (o.continuous)
      for (int i = 1; i + 1 < 2 * k; i += 2) v[i + 1] = v[i];
    if (o.strictly_increasing) {
      bool ok = true;
      for (int i = 0; i < k; ++i) ok = ok && v[2 * i] < v[2 * i + 1];
      for (int i = 1; i + 1 < 2 * k && !o.continuous; i += 2) ok = ok && v[i] < v[i + 1];
      if (!ok) continue;
    }
    std::vector<Segment> segs;
    std::map<Rational, Rational> points;
    auto piece = [&](int i, bool lo_open, bool hi_open) {
      auto dom = Interval::make(p[i], lo_open, p[i + 1], hi_open);
      if (!dom) return;
      Rational slope = (v[2 * i + 1] - v[2 * i]) / (p[i + 1] - p[i]);
      segs.push_back(Segment::linear(*dom, slope, v[2 * i] - slope * p[i]));
    };
    // ownership of interior breakpoint i: 0 left piece, 1 right piece, 2 isolated
    std::vector<int> own(k + 1, 1);
    std::uniform_int_distribution<int> who(0, 2);
    for (int i = 1; i < k; ++i) own[i] = o.right_continuous ? 1 : who(rng);
    for (int i = 0; i < k; ++i) {
      bool lo_open = i > 0 && own[i] != 1;
      bool hi_open = i + 1 < k && own[i + 1] != 0;
      piece(i, lo_open, hi_open);
    }
    for (int i = 1; i < k; ++i)
      if (own[i] == 2) {
        const Rational &a = v[2 * i - 1], &b = v[2 * i];
        Rational val = a == b ? a : (coin(rng) ? midpoint(a, b) : (coin(rng) ? a : b));
        if (o.strictly_increasing && (val == a || val == b) && a != b) val = midpoint(a, b);
        points[p[i]] = val;
      }
    // occasional isolated value at 1 above the last piece
    if (!o.continuous && !o.right_continuous && coin(rng) && k >= 1) {
      Rational last = v[2 * k - 1];
      if (last < Rational(1)) {
        segs.back() = Segment::linear(*Interval::make(p[k - 1], segs.back().domain.lo_open(), 1, true),
                                      segs.back().slope, segs.back().intercept);
        if (segs.back().shape == Segment::Shape::constant)
          segs.back() = Segment::constant(*Interval::make(p[k - 1], segs.back().domain.lo_open(), 1, true),
                                          segs.back().intercept);
        Rational top = random_unit(rng, o.max_den);
        if (top < last || (o.strictly_increasing && top == last)) top = 1;
        points[Rational(1)] = top;
      }
    }
    if (o.direction == Direction::non_increasing) {
      for (auto& s : segs) {
        s = s.shape == Segment::Shape::constant ? Segment::constant(s.domain, Rational(1) - s.intercept)
                                                : Segment::linear(s.domain, -s.slope, Rational(1) - s.intercept);
      }
      for (auto& [x, val] : points) val = Rational(1) - val;
    }
    try {
      return PiecewiseMonotoneFn(o.direction, segs, points);
    } catch (const ParseError&) {
      continue;
    }
  }
}

}  // namespace subnorm::testing
