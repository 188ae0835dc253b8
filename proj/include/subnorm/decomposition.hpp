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

#include <stdexcept>
#include <string>
#include <vector>

#include "subnorm/interval_set.hpp"
#include "subnorm/monotone_fn.hpp"
#include "subnorm/rational.hpp"

namespace subnorm {

/// One gap [b,d] of the range together with the endpoint c that the range
/// keeps as the image of the gap under f∘f⁽⁻¹⁾.
struct Gap {
  Rational b, d, c;

  Interval interval() const { return Interval::closed(b, d); }
  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Range structure of a non-decreasing f.
struct Decomposition {
  IntervalSet m;
  std::vector<Gap> s;
  std::vector<Rational> c;  // ascending
  IntervalSet q;
  Rational f0plus, f1minus, tau, upsilon;
  std::vector<std::size_t> k1;

  IntervalSet c_set() const { return IntervalSet::points(c); }
  IntervalSet m_minus_c() const { return set_minus(m, c_set()); }
  IntervalSet gaps_union() const {
    std::vector<Interval> v;
    for (const auto& g : s) v.push_back(g.interval());
    return IntervalSet(std::move(v));
  }
  /// C ∪ ([0,1] ∖ ⋃[b_k,d_k]); equals m.
  IntervalSet reconstruct() const { return set_union(c_set(), gaps_union().complement()); }
};

inline Decomposition decompose(const PiecewiseMonotoneFn& f) {
  if (!f.non_decreasing()) throw DomainError("decompose needs a non-decreasing function");
  Decomposition d;
  d.m = f.range();
  d.q = f.plateau_set();
  d.f0plus = f.side_limit(0, Side::right);
  d.f1minus = f.side_limit(1, Side::left);

  if (d.m == IntervalSet::unit()) {
    d.s.push_back({1, 1, 1});
    d.c.push_back(1);
  } else {
    const IntervalSet holes = d.m.complement();
    for (const auto& part : holes.parts()) {
      if (part.is_point()) throw std::logic_error("range of a monotone function misses an isolated point");
      const Rational& b = part.lo();
      const Rational& dd = part.hi();
      Rational c = f(pseudo_inverse_at(f, midpoint(b, dd)));
      if (c != b && c != dd) throw std::logic_error("gap image " + c.str() + " is not an endpoint of " + part.str());
      d.s.push_back({b, dd, c});
      for (const auto& e : {b, dd})
        if (d.m.contains(e)) d.c.push_back(e);
    }
    std::sort(d.c.begin(), d.c.end());
    d.c.erase(std::unique(d.c.begin(), d.c.end()), d.c.end());
  }

  if (d.q.empty()) {
    d.upsilon = 0;
    d.tau = 0;
  } else {
    d.upsilon = d.q.sup();
    std::vector<Interval> above;
    for (const auto& p : f.pieces()) {
      auto w = p.where(d.upsilon, false);
      above.insert(above.end(), w.parts().begin(), w.parts().end());
    }
    IntervalSet xs(std::move(above));
    d.tau = xs.empty() ? Rational(1) : xs.inf();
  }

  for (std::size_t k = 0; k < d.s.size(); ++k)
    if (d.q.empty() || d.s[k].b >= d.q.sup()) d.k1.push_back(k);
  return d;
}

}  // namespace subnorm
