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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "subnorm/decomposition.hpp"
#include "subnorm/generated_op.hpp"
#include "subnorm/interval_set.hpp"
#include "subnorm/laws.hpp"
#include "subnorm/monotone_fn.hpp"
#include "subnorm/scan.hpp"
#include "subnorm/tnorm.hpp"
#include "subnorm/verdict.hpp"

namespace subnorm {

struct ClassifyOptions {
  int witness_grid = 12;   // uniform part of the argument set used for witness searches
  int l_resolution = 64;   // interior samples per range part in the 𝔏 witness set
  int arch_grid = 20;      // Archimedean pairs (i/arch_grid, j/arch_grid), 0 < i,j < arch_grid
  int arch_cap = 256;      // power-sequence length cap
};

/// Value-level witness of a failed inclusion T(A,B) ⊆ target: u ∈ A,
/// v ∈ B and z = T(u,v) ∉ target.
struct PairWitness {
  Rational u, v, z;
};

/// Finds a witness for T(A,B) ⊄ target. Parts are split along the family's
/// branch boundary; within a part, closed endpoints are tried before dyadic
/// interior points.
inline std::optional<PairWitness> find_pair_witness(const TNorm& t, const IntervalSet& a, const IntervalSet& b,
                                                    const IntervalSet& target) {
  auto samples = [](const Interval& p) {
    std::vector<Rational> out;
    if (!p.hi_open()) out.push_back(p.hi());
    if (!p.lo_open() && !p.is_point()) out.push_back(p.lo());
    for (int depth = 1; depth <= 6 && !p.is_point(); ++depth) {
      long den = 1L << depth;
      for (long i = 1; i < den; i += 2) out.push_back(p.lo() + (p.hi() - p.lo()) * Rational(i, den));
    }
    return out;
  };
  for (const auto& pa : t.branch_parts(a))
    for (const auto& pb : t.branch_parts(b)) {
      if (set_minus(t.image(pa, pb), target).empty()) continue;
      for (const auto& u : samples(pa)) {
        auto bad = set_minus(t.image(Interval::point(u), pb), target);
        auto z = pick_point(bad);
        if (!z) continue;
        auto v = t.solve(u, *z);
        if (v && pb.contains(*v)) return PairWitness{u, *v, *z};
      }
    }
  return std::nullopt;
}

namespace detail {

inline std::string cat(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) s += p;
  return s;
}

class ClassifierRun {
 public:
  ClassifierRun(const PiecewiseMonotoneFn& f, const TNorm& t, ClassifyOptions o)
      : f_(f), t_(t), op_(f, t), F_(op_.as_op()), o_(o) {
    r_.function_text = f.render();
    r_.tnorm = t.name();
  }

  ClassificationReport run() {
    if (!degenerate()) main_route();
    archimedean();
    finish();
    return std::move(r_);
  }

 private:
  // ---- argument candidates and searches -------------------------------

  const std::vector<Rational>& candidates() {
    if (cand_) return *cand_;
    std::set<Rational> s;
    for (int i = 0; i <= o_.witness_grid; ++i) s.insert(Rational(i, o_.witness_grid));
    auto bps = f_.breakpoints();
    for (std::size_t i = 0; i < bps.size(); ++i) {
      s.insert(bps[i]);
      if (i + 1 < bps.size()) s.insert(midpoint(bps[i], bps[i + 1]));
    }
    std::vector<Rational> vals;
    for (const auto& p : f_.range().parts()) {
      vals.push_back(p.lo());
      vals.push_back(p.hi());
    }
    for (const auto& p : f_.plateau_set().parts()) vals.push_back(p.lo());
    if (dec_)
      for (const auto& g : dec_->s) vals.insert(vals.end(), {g.b, g.d, g.c});
    for (const auto& v : vals) {
      if (!in_unit(v)) continue;
      s.insert(op_.finv()(v));
      for (const auto& part : f_.level_set(v).parts()) {
        s.insert(part.lo());
        s.insert(part.hi());
        s.insert(midpoint(part.lo(), part.hi()));
      }
    }
    cand_ = std::vector<Rational>(s.begin(), s.end());
    return *cand_;
  }

  LawScanner& scanner() {
    if (!scanner_) scanner_ = std::make_unique<LawScanner>(F_, candidates());
    return *scanner_;
  }

  std::optional<Counterexample> search(Law l) {
    auto res = scanner().run({l, o_.arch_cap});
    if (res.violated == Truth::yes) return res.first;
    return std::nullopt;
  }

  std::optional<Counterexample> confirm(Law l, std::vector<Rational> in) {
    auto c = check_instance(F_, {l, o_.arch_cap}, in);
    if (c.violated == Truth::yes) return c.counterexample;
    return std::nullopt;
  }

  /// cc or cancellation instance with the two varying arguments ordered.
  std::optional<Counterexample> confirm_pair(Law l, const Rational& x, Rational y, Rational z) {
    if (y == z) return std::nullopt;
    if (z < y) std::swap(y, z);
    return confirm(l, {x, y, z});
  }

  std::optional<Rational> pre(const Rational& v) const { return f_.preimage(v); }

  /// Two distinct arguments sharing the value v, if any.
  std::optional<std::pair<Rational, Rational>> two_preimages(const Rational& v) const {
    auto ls = f_.level_set(v);
    if (ls.empty()) return std::nullopt;
    const auto& first = ls.parts().front();
    if (!first.is_point()) {
      Rational a = first.lo_open() ? midpoint(first.lo(), midpoint(first.lo(), first.hi())) : first.lo();
      Rational b = first.hi_open() ? midpoint(midpoint(first.lo(), first.hi()), first.hi()) : first.hi();
      return std::make_pair(a, b);
    }
    if (ls.parts().size() >= 2) return std::make_pair(first.lo(), ls.parts()[1].lo());
    return std::nullopt;
  }

  // ---- degenerate configurations ---------------------------------------

  void set(Property p, Verdict v) { r_[p] = std::move(v); }

  /// F ≡ 0.
  void zero_bundle(const std::string& why) {
    std::vector<std::string> ev{why, "F(1,1) = 0 and F is non-decreasing, so F ≡ 0"};
    set(Property::t_subnorm, Verdict::yes(ev));
    set(Property::conditionally_cancellative, Verdict::yes(ev));
    set(Property::cancellative, Verdict::no({"F ≡ 0"}, confirm(Law::cancellation, {1, 0, 1})));
    set(Property::strictly_monotone_op, Verdict::no({"F ≡ 0"}, confirm(Law::strict_monotonicity, {1, 0, 1})));
    neutral_ = Verdict::no({"F(1,1) = 0"}, confirm(Law::neutral_one, {1}));
    set(Property::continuous, Verdict::yes({"F is constant"}));
  }

  /// F = a at (1,1) and 0 elsewhere.
  void corner_bundle(const Value& a) {
    std::vector<std::string> ev{"f(1⁻) ∈ Q and F(1,y) = 0 for y in the last plateau",
                                "F = F(1,1) at (1,1) and 0 elsewhere"};
    set(Property::t_subnorm, Verdict::yes(ev));
    set(Property::conditionally_cancellative, Verdict::yes(ev));
    const Rational half(1, 2);
    set(Property::cancellative, Verdict::no({"F(1,0) = F(1,1/2) = 0"}, confirm(Law::cancellation, {1, 0, half})));
    set(Property::strictly_monotone_op,
        Verdict::no({"F(1,0) = F(1,1/2) = 0"}, confirm(Law::strict_monotonicity, {1, 0, half})));
    neutral_ = Verdict::no({"F(1/2,1) = 0"}, confirm(Law::neutral_one, {half}));
    if (a.is_exact() && a.lo().is_zero()) {
      set(Property::continuous, Verdict::yes({"F is constant"}));
    } else if (positive(a) == Truth::yes) {
      set(Property::continuous, Verdict::no({"F jumps from 0 to F(1,1) = " + a.str() + " at (1,1)"}, std::nullopt,
                                            {Rational(1), Rational(1)}));
    } else {
      set(Property::continuous, Verdict::unknown("F(1,1) enclosure touches 0"));
    }
  }

  bool degenerate() {
    if (!f_.non_decreasing()) {
      r_.route = "degenerate: non-increasing f";
      bool zero = f_.side_limit(0, Side::right).is_zero();
      r_.log("f(x) = 0 for x ∈ (0,1]", "f(0⁺) = " + f_.side_limit(0, Side::right).str(), zero ? Status::yes : Status::no);
      if (zero) {
        Value v = F_(1, 1);
        if (v.is_exact() && v.lo().is_zero()) {
          zero_bundle("f non-increasing with f = 0 on (0,1]");
          return true;
        }
      }
      non_increasing_fallback();
      return true;
    }
    const Rational f1 = f_(1);
    const IntervalSet q = f_.plateau_set();
    if (q.contains(f1)) {
      r_.route = "degenerate: f(1) ∈ Q";
      Value v = F_(1, 1);
      r_.log("F(1,1) = 0", "F(1,1) = " + v.str(), v == Value(0) ? Status::yes : Status::no);
      if (v == Value(0)) {
        zero_bundle("f(1) ∈ Q");
      } else {
        auto xs = two_preimages(f1);
        std::optional<Counterexample> w;
        if (xs) w = confirm_pair(Law::conditional_cancellation, 1, xs->first, xs->second);
        auto why = std::vector<std::string>{"f(1) ∈ Q and F(1,1) > 0"};
        if (w || positive(v) == Truth::yes) {
          set(Property::conditionally_cancellative, Verdict::no(why, w));
        } else {
          set(Property::conditionally_cancellative, Verdict::unknown("F(1,1) enclosure touches 0"));
        }
        generic_rest();
      }
      return true;
    }
    const Rational f1m = f_.side_limit(1, Side::left);
    if (q.contains(f1m)) {
      r_.route = "degenerate: f(1⁻) ∈ Q";
      auto ys = two_preimages(f1m);
      Rational y0 = ys ? ys->first : *pre(f1m);
      Value v = F_(1, y0);
      r_.log("F(1,y0) = 0 for y0 in the last plateau", "y0 = " + y0.str() + ", F(1,y0) = " + v.str(),
             v == Value(0) ? Status::yes : Status::no);
      if (v == Value(0)) {
        corner_bundle(F_(1, 1));
      } else {
        std::optional<Counterexample> w;
        if (ys) w = confirm_pair(Law::conditional_cancellation, 1, ys->first, ys->second);
        if (w || positive(v) == Truth::yes) {
          set(Property::conditionally_cancellative, Verdict::no({"f(1⁻) ∈ Q and F(1,y0) > 0"}, w));
        } else {
          set(Property::conditionally_cancellative, Verdict::unknown("F(1,y0) enclosure touches 0"));
        }
        generic_rest();
      }
      return true;
    }
    return false;
  }

  void non_increasing_fallback() {
    bool strict = t_.strict();
    auto cc = search(Law::conditional_cancellation);
    if (cc) {
      set(Property::conditionally_cancellative, Verdict::no({"conditional cancellation fails"}, cc));
    } else if (strict) {
      set(Property::conditionally_cancellative,
          Verdict::no({"f non-increasing and not 0 on (0,1]; strict T: not a conditionally cancellative t-subnorm"}));
    } else {
      set(Property::conditionally_cancellative, Verdict::unknown(unmet_reason()));
    }
    generic_rest();
    if (strict && !r_[Property::cancellative].is(Status::no))
      set(Property::cancellative, Verdict::no({"f is not strictly increasing (strict T)"}, search(Law::cancellation)));
  }

  /// Search-based verdicts for the properties still unset.
  void generic_rest() {
    if (!r_.verdicts.count(Property::t_subnorm)) {
      std::optional<Counterexample> w;
      for (Law l : {Law::commutativity, Law::monotonicity, Law::bounded_by_min, Law::associativity})
        if (!w) w = search(l);
      set(Property::t_subnorm, w ? Verdict::no({"t-subnorm axiom fails"}, w)
                                 : Verdict::unknown("no theorem applies; axioms hold on the witness grid", grid_size()));
    }
    if (!r_.verdicts.count(Property::cancellative)) {
      auto w = plateau_witness(Law::cancellation);
      if (!w) w = search(Law::cancellation);
      set(Property::cancellative, w ? Verdict::no({"cancellation law fails"}, w)
                                    : Verdict::unknown("no theorem applies", grid_size()));
    }
    if (!r_.verdicts.count(Property::strictly_monotone_op)) {
      auto w = plateau_witness(Law::strict_monotonicity);
      if (!w) w = search(Law::strict_monotonicity);
      set(Property::strictly_monotone_op, w ? Verdict::no({"strict monotonicity fails"}, w)
                                            : Verdict::unknown("no theorem applies", grid_size()));
    }
    if (!neutral_) neutral_ = neutral_search();
    if (!r_.verdicts.count(Property::continuous))
      set(Property::continuous, Verdict::unknown("continuity criterion needs strictly increasing f and strict T"));
  }

  int grid_size() { return static_cast<int>(candidates().size()); }

  /// For f with a plateau y1 < y2: F(1,y1) = F(1,y2), violating
  /// cancellation and strict monotonicity for any T.
  std::optional<Counterexample> plateau_witness(Law l) {
    for (const auto& part : f_.plateau_set().parts()) {
      auto ys = two_preimages(part.lo());
      if (!ys) continue;
      if (auto w = confirm_pair(l, 1, ys->first, ys->second)) return w;
    }
    return std::nullopt;
  }

  std::string unmet_reason() const {
    std::string why = "preconditions unmet: " + t_.name() + " is";
    std::vector<std::string> miss;
    if (!t_.flags().continuous) miss.push_back(" not continuous");
    if (!t_.flags().strictly_monotone) miss.push_back(" not strictly monotone");
    if (!t_.exact()) miss.push_back(" not exact on rationals");
    if (!t_.neutral_one()) miss.push_back(" not a t-norm");
    for (std::size_t i = 0; i < miss.size(); ++i) why += (i ? "," : "") + miss[i];
    return why + "; run the oracle for a brute-force check";
  }

  // ---- neutral element --------------------------------------------------

  Verdict neutral_search() {
    Value v = F_(1, 1);
    if (eq(v, Value(1)) == Truth::no) return Verdict::no({"F(1,1) = " + v.str() + " ≠ 1"}, confirm(Law::neutral_one, {1}));
    bool f_one = f_.non_decreasing() && f_(1) == Rational(1);
    bool min_like = t_.family() == Family::minimum && f_.non_decreasing();
    if (t_.neutral_one() && (f_one || min_like)) {
      if (f_.strictly_monotone())
        return Verdict::yes({f_one ? "f(1) = 1 and T(a,1) = a" : "T = min and a ≤ f(1) for a ∈ Ran(f)",
                             "f strictly increasing, so f⁽⁻¹⁾(f(x)) = x"});
      for (const auto& part : f_.plateau_set().parts()) {
        auto ys = two_preimages(part.lo());
        if (!ys) continue;
        if (auto w = confirm(Law::neutral_one, {max(ys->first, ys->second)}))
          return Verdict::no({"f has a plateau, so f⁽⁻¹⁾(f(x)) < x at its right end"}, w);
      }
    }
    auto res = scanner().run({Law::neutral_one});
    if (res.violated == Truth::yes) return Verdict::no({"F(x,1) ≠ x"}, res.first);
    return Verdict::unknown("F(x,1) = x holds on the witness grid only", grid_size());
  }

  // ---- main route -------------------------------------------------------

  IntervalSet image(const IntervalSet& a, const IntervalSet& b) const { return t_.image(a, b); }

  /// T(A,B) ⊆ target with value and law witnesses.
  struct Inclusion {
    Verdict verdict;
    std::optional<PairWitness> pair;
  };

  Inclusion inclusion_ii() {
    const auto& d = *dec_;
    IntervalSet a = d.m_minus_c();
    IntervalSet target = set_union(d.m, IntervalSet(Interval::closed(0, d.f0plus)));
    IntervalSet img = image(a, d.m);
    auto chk = is_subset(img, target);
    r_.log("(ii) T(M∖C, M) ⊆ M ∪ [0,f(0⁺)]", "T(M∖C,M) = " + img.str() + "; M ∪ [0,f(0⁺)] = " + target.str(),
           chk ? Status::yes : Status::no, chk ? "" : "least violating value " + chk.witness->str());
    if (chk) return {Verdict::yes({"(ii) T(M∖C, M) ⊆ M ∪ [0,f(0⁺)]"}), std::nullopt};
    auto pw = find_pair_witness(t_, a, d.m, target);
    std::optional<Counterexample> law;
    std::vector<Rational> vw;
    if (pw) {
      vw = {pw->u, pw->v, pw->z};
      law = cc_from_pair(*pw, a);
      r_.log("(ii) witness", "T(" + pw->u.str() + "," + pw->v.str() + ") = " + pw->z.str() + " ∉ M ∪ [0,f(0⁺)]",
             Status::no);
    }
    return {Verdict::no({"(ii) fails: T(M∖C, M) ⊄ M ∪ [0,f(0⁺)]"}, law, vw), pw};
  }

  /// Perturbs u inside its part of M∖C until two arguments collapse onto
  /// the same gap.
  std::optional<Counterexample> cc_from_pair(const PairWitness& pw, const IntervalSet& a) {
    auto y = pre(pw.v);
    if (!y) return std::nullopt;
    const Interval* part = nullptr;
    for (const auto& p : a.parts())
      if (p.contains(pw.u)) part = &p;
    if (!part || part->is_point()) return std::nullopt;
    Rational width = part->hi() - part->lo();
    for (int j = 1; j <= 40; ++j) {
      Rational delta = width * Rational(1, 1L << std::min(j, 62));
      std::vector<std::pair<Rational, Rational>> pairs{
          {pw.u - delta, pw.u}, {pw.u, pw.u + delta}, {pw.u - delta, pw.u + delta}};
      for (const auto& [u1, u2] : pairs) {
        if (!part->contains(u1) || !part->contains(u2)) continue;
        auto x1 = pre(u1), x2 = pre(u2);
        if (!x1 || !x2) continue;
        if (auto w = confirm_pair(Law::conditional_cancellation, *y, *x1, *x2)) return w;
      }
    }
    return std::nullopt;
  }

  Verdict inclusion_iii() {
    const auto& d = *dec_;
    IntervalSet target(Interval::closed(0, d.f0plus));
    IntervalSet img = image(d.q, d.m);
    auto chk = is_subset(img, target);
    r_.log("(iii) T(Q, M) ⊆ [0,f(0⁺)]", "T(Q,M) = " + img.str() + "; [0,f(0⁺)] = " + target.str(),
           chk ? Status::yes : Status::no, chk ? "" : "least violating value " + chk.witness->str());
    if (chk) return Verdict::yes({"(iii) T(Q, M) ⊆ [0,f(0⁺)]"});
    std::optional<Counterexample> law;
    std::vector<Rational> vw;
    const Rational f1 = f_(1);
    for (const auto& part : d.q.parts()) {
      Rational z = t_.exact(part.lo(), f1);
      if (z <= d.f0plus) continue;
      vw = {part.lo(), f1, z};
      if (auto xs = two_preimages(part.lo())) law = confirm_pair(Law::conditional_cancellation, 1, xs->first, xs->second);
      if (law) break;
    }
    return Verdict::no({"(iii) fails: T(Q, M) ⊄ [0,f(0⁺)]"}, law, vw);
  }

  IntervalSet h_set(std::size_t k) {
    const auto& d = *dec_;
    if (!tmm_) tmm_ = image(d.m, d.m);
    const auto& g = d.s[k];
    return o_hull(set_union(IntervalSet::point(g.c), set_intersect(*tmm_, IntervalSet(g.interval()))));
  }

  IntervalSet h_union(bool all_k) {
    const auto& d = *dec_;
    std::vector<Interval> parts;
    for (std::size_t k = 0; k < d.s.size(); ++k) {
      if (!all_k && std::find(d.k1.begin(), d.k1.end(), k) == d.k1.end()) continue;
      auto h = h_set(k);
      if (!all_k) r_.log("H_" + std::to_string(k + 1), h.str(), Status::yes, "gap " + d.s[k].interval().str());
      parts.insert(parts.end(), h.parts().begin(), h.parts().end());
    }
    return IntervalSet(std::move(parts));
  }

  /// f⁽⁻¹⁾ is constant on every gap [b_k,d_k]; fails exactly when some b_k
  /// is a plateau value, since f⁽⁻¹⁾(b_k) is then the left end of the plateau.
  bool finv_flat_on_gaps() {
    const auto& d = *dec_;
    for (const auto& g : d.s)
      if (d.q.contains(g.b)) {
        r_.log("f⁽⁻¹⁾ constant on each gap", "b = " + g.b.str() + " ∈ Q", Status::no,
               "the H_k criterion for associativity does not apply");
        return false;
      }
    return true;
  }

  /// T(⋃H_k, M∖{0}) ∩ (M∖C) = ∅ over K₁ (or all of K).
  bool h_condition(bool all_k) {
    const auto& d = *dec_;
    IntervalSet u = h_union(all_k);
    IntervalSet m0 = set_minus(d.m, IntervalSet::point(0));
    IntervalSet hit = set_intersect(image(u, m0), d.m_minus_c());
    r_.log(all_k ? "T(⋃_{k∈K} H_k, M∖{0}) ∩ (M∖C) = ∅" : "(i) T(⋃_{k∈K₁} H_k, M∖{0}) ∩ (M∖C) = ∅", hit.str(),
           hit.empty() ? Status::yes : Status::no);
    return hit.empty();
  }

  /// Sample points of a set: closed endpoints, midpoints, n interior points
  /// per part.
  static std::vector<Rational> sample(const IntervalSet& s, int n) {
    std::vector<Rational> out;
    for (const auto& p : s.parts()) {
      if (!p.lo_open()) out.push_back(p.lo());
      if (!p.hi_open() && !p.is_point()) out.push_back(p.hi());
      for (int i = 1; i <= n && !p.is_point(); ++i) out.push_back(p.lo() + (p.hi() - p.lo()) * Rational(i, n + 1));
    }
    return out;
  }

  struct LHit {
    Rational y, point;
    std::size_t k, l;
    bool second_kind;
  };

  /// Exact 𝔏 contributions at the witness values y; returns the first hit.
  std::optional<LHit> l_scan(int n) {
    const auto& d = *dec_;
    IntervalSet mc = d.m_minus_c();
    std::vector<Rational> ys;
    for (const auto& p : d.m.parts()) {
      if (!p.lo_open()) ys.push_back(p.lo());
      if (!p.hi_open()) ys.push_back(p.hi());
      for (int i = 1; i <= n && !p.is_point(); ++i) ys.push_back(p.lo() + (p.hi() - p.lo()) * Rational(i, n + 1));
    }
    for (const auto& g : d.s)
      for (const auto& v : {g.b, g.d, g.c})
        if (d.m.contains(v)) ys.push_back(v);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (const auto& y : ys) {
      std::map<std::size_t, IntervalSet> mk;
      for (auto k : d.k1) mk[k] = set_intersect(d.m, t_.slice_preimage(y, IntervalSet(d.s[k].interval())));
      IntervalSet my = set_intersect(d.m, t_.slice_preimage(y, mc));
      for (auto k : d.k1) {
        auto ik = o_hull(set_union(IntervalSet::point(d.s[k].c), image(mk[k], IntervalSet::point(y))));
        auto hit = set_intersect(image(ik, my), mc);
        if (!hit.empty()) return LHit{y, *pick_point(hit), k, k, false};
      }
      for (auto k : d.k1)
        for (auto l : d.k1) {
          if (mk[k].empty() || mk[l].empty()) continue;
          auto j = o_hull(set_union(image(mk[k], IntervalSet::point(d.s[l].c)), image(IntervalSet::point(d.s[k].c), mk[l])));
          auto hit = set_intersect(j, mc);
          if (!hit.empty()) return LHit{y, *pick_point(hit), k, l, true};
        }
    }
    return std::nullopt;
  }

  /// Associativity witness behind an 𝔏 hit: x ∈ M_k^y and z ∈ M^y (first
  /// kind) or z ∈ M_l^y (second kind).
  std::optional<Counterexample> assoc_from_l(const LHit& h) {
    const auto& d = *dec_;
    IntervalSet mc = d.m_minus_c();
    auto xs = sample(set_intersect(d.m, t_.slice_preimage(h.y, IntervalSet(d.s[h.k].interval()))), 6);
    auto zs = sample(set_intersect(d.m, t_.slice_preimage(h.y, h.second_kind ? IntervalSet(d.s[h.l].interval()) : mc)), 6);
    auto n = pre(h.y);
    if (!n) return std::nullopt;
    for (const auto& x : xs)
      for (const auto& z : zs) {
        auto m = pre(x), s = pre(z);
        if (!m || !s) continue;
        if (auto w = confirm(Law::associativity, {*m, *n, *s})) return w;
      }
    return std::nullopt;
  }

  bool strict_gate() const { return t_.strict() && t_.exact() && t_.neutral_one(); }

  void ensure_decomposition() {
    if (dec_) return;
    dec_ = decompose(f_);
    r_.decomposition = dec_;
  }

 public:
  /// Forced classification when f(1) ∈ Q, f(1⁻) ∈ Q or f is non-increasing.
  std::optional<ClassificationReport> check_degenerate() {
    if (!degenerate()) return std::nullopt;
    archimedean();
    finish();
    return r_;
  }

  /// (ii) T(M∖C, M) ⊆ M ∪ [0,f(0⁺)] and (iii) T(Q, M) ⊆ [0,f(0⁺)].
  std::pair<Verdict, Verdict> check_inclusion_conditions() {
    ensure_decomposition();
    if (!t_.exact()) {
      auto u = Verdict::unknown("T is not exact on rationals; set images are not computable");
      return {u, u};
    }
    if (!incl_) {
      auto ii = inclusion_ii();
      incl_ = std::make_pair(ii.verdict, inclusion_iii());
    }
    return *incl_;
  }

  /// H_k for k ∈ K₁.
  std::map<std::size_t, IntervalSet> h_k_sets() {
    ensure_decomposition();
    if (!t_.exact()) throw DomainError("H_k needs an exact t-norm family");
    std::map<std::size_t, IntervalSet> out;
    for (auto k : dec_->k1) out.emplace(k, h_set(k));
    return out;
  }

  /// Yes when (i) over K₁, (ii) and (iii) all hold; No when (ii) or (iii)
  /// fails, or when f(1) = 1 and (i) fails; Unknown otherwise.
  Verdict check_prop_sufficient() {
    ensure_decomposition();
    if (!strict_gate()) return Verdict::unknown(unmet_reason());
    auto [ii, iii] = check_inclusion_conditions();
    if (!ii.is(Status::yes) || !iii.is(Status::yes)) {
      Verdict v = !ii.is(Status::yes) ? ii : iii;
      v.evidence.push_back("conditional cancellation law fails (strict T)");
      return v;
    }
    if (h_condition(false))
      return Verdict::yes({"(i) T(⋃_{k∈K₁} H_k, M∖{0}) ∩ (M∖C) = ∅", "(ii) T(M∖C, M) ⊆ M ∪ [0,f(0⁺)]",
                           "(iii) T(Q, M) ⊆ [0,f(0⁺)]"});
    if (f_(1) == Rational(1)) {
      auto w = assoc_witness_via_l();
      if (!w) w = search(Law::associativity);
      return Verdict::no({"f(1) = 1 and (i) fails, so F is not a conditionally cancellative t-subnorm"}, w);
    }
    return Verdict::unknown("(i) fails; f(1) < 1 so (i) is not necessary");
  }

  /// 𝔏 contributions over the witness values at resolution n.
  Verdict l_set_check(int n) {
    ensure_decomposition();
    if (!strict_gate()) return Verdict::unknown(unmet_reason());
    auto hit = l_scan(n);
    if (!hit) {
      r_.log("𝔏(M) ∩ (M∖C) = ∅", "no hit at resolution " + std::to_string(n), Status::unknown);
      return Verdict::unknown("no 𝔏 contribution meets M∖C at the witness values", n);
    }
    r_.log("𝔏(M) ∩ (M∖C) = ∅", "hit " + hit->point.str() + " at y = " + hit->y.str(), Status::no,
           std::string(hit->second_kind ? "J" : "T(I,M^y)") + " with k = " + std::to_string(hit->k + 1) +
               (hit->second_kind ? ", l = " + std::to_string(hit->l + 1) : ""));
    auto w = assoc_from_l(*hit);
    if (!w) w = search(Law::associativity);
    return Verdict::no({"𝔏(M) ∩ (M∖C) ≠ ∅ at y = " + hit->y.str()}, w, {hit->y, hit->point});
  }

  /// Strict exact T: Yes iff f strictly increasing and T(M,M) ⊆ M.
  Verdict check_cancellative() {
    ensure_decomposition();
    if (!f_.strictly_monotone() || !f_.non_decreasing()) {
      auto w = plateau_witness(Law::cancellation);
      if (!w) w = search(Law::cancellation);
      if (w || strict_gate()) return Verdict::no({"f is not strictly increasing"}, w);
      return Verdict::unknown(unmet_reason());
    }
    if (!strict_gate()) return Verdict::unknown(unmet_reason());
    if (*tmm_in_m()) return Verdict::yes({"f strictly increasing", "T(M, M) ⊆ M"});
    auto w = search(Law::cancellation);
    if (!w) w = search(Law::associativity);
    return Verdict::no({"T(M, M) ⊄ M"}, w);
  }

 private:
  std::optional<bool> tmm_in_m() {
    if (tmm_ok_) return tmm_ok_;
    const auto& d = *dec_;
    if (t_.exact()) {
      if (!tmm_) tmm_ = image(d.m, d.m);
      auto chk = is_subset(*tmm_, d.m);
      tmm_ok_ = static_cast<bool>(chk);
      r_.log("T(M, M) ⊆ M", "T(M,M) = " + tmm_->str(), chk ? Status::yes : Status::no,
             chk ? "" : "least violating value " + chk.witness->str());
    } else if (d.m.parts().size() == 1 && d.m.inf().is_zero() && d.m.has_min()) {
      tmm_ok_ = true;
      r_.log("T(M, M) ⊆ M", "M = " + d.m.str() + " is [0,sup M] and T ≤ min", Status::yes);
    }
    return tmm_ok_;
  }

  void main_route() {
    ensure_decomposition();
    const bool strict = strict_gate();
    r_.route = strict ? "main: strict exact T" : "main: theorem preconditions unmet";
    r_.log("T strict (continuous and strictly monotone), exact, neutral 1", t_.name(),
           strict ? Status::yes : Status::unknown, strict ? "" : unmet_reason());

    std::optional<std::pair<Verdict, Verdict>> incl;
    if (t_.exact()) incl = check_inclusion_conditions();
    const bool f_strict = f_.strictly_monotone();
    const std::optional<bool> closed = tmm_in_m();

    if (!strict) {
      r_.notes.push_back(unmet_reason());
      set(Property::t_subnorm, Verdict::unknown(unmet_reason()));
      set(Property::conditionally_cancellative, Verdict::unknown(unmet_reason()));
    } else {
      const bool laws_ok = incl->first.is(Status::yes) && incl->second.is(Status::yes);
      Verdict cc = check_prop_sufficient();
      if (cc.is(Status::unknown)) cc = l_set_check(o_.l_resolution);
      set(Property::conditionally_cancellative, cc);

      // associativity is the only t-subnorm axiom that can fail here
      if (cc.is(Status::yes)) {
        set(Property::t_subnorm, Verdict::yes(cc.evidence));
      } else if (finv_flat_on_gaps() && h_condition(true)) {
        set(Property::t_subnorm, Verdict::yes({"T(⋃_{k∈K} H_k, M∖{0}) ∩ (M∖C) = ∅"}));
      } else if (laws_ok && cc.is(Status::no)) {
        set(Property::t_subnorm, Verdict::no({"conditional cancellation law holds ((ii),(iii)) but F is not a "
                                              "conditionally cancellative t-subnorm"},
                                             cc.witness));
      } else {
        auto w = search(Law::associativity);
        set(Property::t_subnorm,
            w ? Verdict::no({"associativity fails"}, w) : Verdict::unknown("associativity not decided", grid_size()));
      }
    }
    set(Property::cancellative, check_cancellative());

    if (f_strict && closed && *closed && t_.flags().strictly_monotone) {
      set(Property::strictly_monotone_op,
          Verdict::yes({"f strictly increasing", "T(M, M) ⊆ M", "T strictly monotone"}));
    } else if (auto w = plateau_witness(Law::strict_monotonicity)) {
      set(Property::strictly_monotone_op, Verdict::no({"f is not strictly increasing"}, w));
    } else if (auto w2 = search(Law::strict_monotonicity)) {
      set(Property::strictly_monotone_op, Verdict::no({"strict monotonicity fails"}, w2));
    } else {
      set(Property::strictly_monotone_op, Verdict::unknown("no exact criterion applies", grid_size()));
    }

    neutral_ = neutral_search();
    set(Property::continuous, check_continuity());
  }

  std::optional<Counterexample> assoc_witness_via_l() {
    auto hit = l_scan(std::min(o_.l_resolution, 16));
    if (!hit) return std::nullopt;
    return assoc_from_l(*hit);
  }

  // ---- continuity -------------------------------------------------------

 public:
  Verdict check_continuity() {
    if (!f_.non_decreasing() || !f_.strictly_monotone())
      return Verdict::unknown("continuity criterion needs strictly increasing f");
    const IntervalSet m = f_.range();
    if (!t_.flags().strictly_monotone || !t_.continuous_on(m))
      return Verdict::unknown("continuity criterion needs T strictly monotone and continuous on Ran(f)²");
    auto right = [&](const Rational& a) { return a == Rational(1) ? f_(1) : f_.side_limit(a, Side::right); };
    std::vector<Rational> jumps;
    for (const auto& a : f_.breakpoints()) {
      if (a.is_zero()) continue;
      if (f_.side_limit(a, Side::left) != right(a)) jumps.push_back(a);
    }
    r_.log("discontinuities of f on (0,1] (f(1⁺) := f(1))", IntervalSet::points(jumps).str(),
           jumps.empty() ? Status::yes : Status::no);
    if (jumps.empty())
      return Verdict::yes({"f continuous on (0,1] and T continuous: every interval reduces to a point"});
    if (!t_.exact()) return Verdict::unknown("continuity criterion needs exact T when f jumps");

    auto more_than_one = [&](const Rational& lo, const Rational& hi) -> std::optional<std::pair<Rational, Rational>> {
      auto s = set_intersect(m, IntervalSet(Interval::closed(lo, hi)));
      if (s.empty() || s.is_point()) return std::nullopt;
      const auto& p0 = s.parts().front();
      if (!p0.is_point()) {
        Rational a = p0.lo_open() ? midpoint(p0.lo(), p0.hi()) : p0.lo();
        Rational b = p0.hi_open() ? midpoint(a, p0.hi()) : p0.hi();
        return std::make_pair(a, b);
      }
      return std::make_pair(p0.lo(), s.parts()[1].lo());
    };
    std::vector<Rational> edges;
    for (const auto& p : m.parts()) edges.insert(edges.end(), {p.lo(), p.hi()});

    for (const auto& a : jumps) {
      Rational p = f_.side_limit(a, Side::left), q = right(a);
      // y at breakpoints.
      for (const auto& b : f_.breakpoints()) {
        if (b.is_zero()) continue;
        Rational r = f_.side_limit(b, Side::left), s = right(b);
        if (auto two = more_than_one(t_.exact(p, r), t_.exact(q, s)))
          return continuity_no(a, b, p, q, r, s, *two);
      }
      // y inside pieces: v ranges over the open image of each piece.
      for (const auto& seg : f_.pieces()) {
        if (seg.is_point()) continue;
        Rational v_lo = seg.at(seg.domain.lo()), v_hi = seg.at(seg.domain.hi());
        std::vector<Rational> crit{v_lo, v_hi};
        for (const auto& e : edges)
          for (const auto& base : {p, q})
            if (auto v = t_.solve(base, e); v && v_lo < *v && *v < v_hi) crit.push_back(*v);
        std::sort(crit.begin(), crit.end());
        crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
        std::vector<Rational> probes;
        for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
          probes.push_back(midpoint(crit[i], crit[i + 1]));
          if (i > 0) probes.push_back(crit[i]);
        }
        for (const auto& v : probes) {
          if (auto two = more_than_one(t_.exact(p, v), t_.exact(q, v))) {
            auto y = pre(v);
            if (y) return continuity_no(a, *y, p, q, v, v, *two);
          }
        }
      }
    }
    return Verdict::yes({"Ran(f) ∩ [T(f(x⁻),f(y⁻)), T(f(x⁺),f(y⁺))] has at most one element at every jump x "
                         "and every breakpoint or critical value of y"});
  }

 private:
  Verdict continuity_no(const Rational& x, const Rational& y, const Rational& p, const Rational& q, const Rational& r,
                        const Rational& s, const std::pair<Rational, Rational>& two) {
    std::string iv = "[" + t_.exact(p, r).str() + "," + t_.exact(q, s).str() + "]";
    r_.log("Ran(f) ∩ [T(f(x⁻),f(y⁻)), T(f(x⁺),f(y⁺))] at most one element",
           "x = " + x.str() + ", y = " + y.str() + ": interval " + iv + " contains " + two.first.str() + " and " +
               two.second.str(),
           Status::no);
    return Verdict::no({"Ran(f) meets " + iv + " in more than one point at (x,y) = (" + x.str() + "," + y.str() + ")"},
                       std::nullopt, {x, y, two.first, two.second});
  }

  // ---- Archimedean ------------------------------------------------------

  /// x < 1 and 0 < z ≤ x with F(x,z) ≥ z; then x^(n) ≥ z for every n by
  /// monotonicity of F.
  std::optional<Verdict> arch_fixed_point() {
    std::set<Rational> xs(candidates().begin(), candidates().end());
    Rational step(1, 2);
    for (int k = 1; k <= 60; ++k, step = step / Rational(2)) xs.insert(Rational(1) - step);
    for (const auto& z : candidates()) {
      if (z.is_zero() || z == Rational(1)) continue;
      for (auto it = xs.lower_bound(z); it != xs.end() && *it < Rational(1); ++it) {
        const Rational& x = *it;
        Value fxz = F_(x, z);
        if (le(Value(z), fxz) != Truth::yes) continue;
        Rational y = z / Rational(2);
        auto chk = check_instance(F_, {Law::archimedean, o_.arch_cap}, {x, y});
        if (chk.counterexample && chk.counterexample->conclusive)
          return Verdict::no({"power sequence reaches a fixed point at or above y"}, chk.counterexample);
        return Verdict::no({"F(x,z) ≥ z with z ≤ x, so x^(n) ≥ z > y for every n"}, std::nullopt,
                           {x, z, y});
      }
    }
    return std::nullopt;
  }

  void archimedean() {
    if (auto v = arch_fixed_point()) {
      set(Property::archimedean, *v);
      return;
    }
    const int n = o_.arch_grid;
    std::optional<Counterexample> exact_no, not_witnessed;
    for (int i = 1; i < n && !exact_no; ++i) {
      Rational x(i, n);
      auto seq = power_sequence(F_, x, o_.arch_cap, Rational(1, n));
      for (int j = 1; j < n && !exact_no; ++j) {
        Rational y(j, n);
        Truth reached = Truth::no;
        for (const auto& v : seq) {
          reached = reached || lt(v, Value(y));
          if (reached == Truth::yes) break;
        }
        if (reached == Truth::yes) continue;
        auto chk = check_instance(F_, {Law::archimedean, o_.arch_cap}, {x, y});
        if (!chk.counterexample) continue;
        if (chk.counterexample->conclusive) exact_no = chk.counterexample;
        else if (!not_witnessed) not_witnessed = chk.counterexample;
      }
    }
    Verdict v;
    if (exact_no) {
      v = Verdict::no({"power sequence reaches a fixed point at or above y"}, exact_no);
    } else if (not_witnessed) {
      v = Verdict::no({"x^(n) < y not witnessed within the cap"}, not_witnessed);
      v.at_resolution = true;
      v.resolution = n;
    } else {
      v = Verdict::yes({"x^(n) < y witnessed for every grid pair with n ≤ " + std::to_string(o_.arch_cap)});
      v.at_resolution = true;
      v.resolution = n;
    }
    set(Property::archimedean, v);
  }

  // ---- combination and consistency -------------------------------------

  void finish() {
    auto& ts = r_[Property::t_subnorm];
    auto& cc = r_[Property::conditionally_cancellative];
    auto& ca = r_[Property::cancellative];
    if (ca.is(Status::yes) && !cc.is(Status::yes)) {
      if (cc.is(Status::no)) r_.notes.push_back("internal inconsistency: cancellative Yes but conditionally_cancellative No");
      cc = Verdict::yes({"implied by cancellative t-subnorm"});
    }
    if (cc.is(Status::yes) && !ts.is(Status::yes)) {
      if (ts.is(Status::no)) r_.notes.push_back("internal inconsistency: conditionally_cancellative Yes but t_subnorm No");
      ts = Verdict::yes({"implied by conditionally cancellative t-subnorm"});
    }

    const Verdict& nv = *neutral_;
    r_.log("neutral element 1: F(x,1) = x", nv.witness ? nv.witness->str() : "", nv.status);
    Verdict tn;
    if (ts.is(Status::no)) tn = Verdict::no({"not a t-subnorm"}, ts.witness, ts.value_witness);
    else if (nv.is(Status::no)) tn = Verdict::no(nv.evidence, nv.witness);
    else if (ts.is(Status::yes) && nv.is(Status::yes)) {
      tn = Verdict::yes(ts.evidence);
      tn.evidence.insert(tn.evidence.end(), nv.evidence.begin(), nv.evidence.end());
    } else {
      tn = Verdict::unknown(ts.is(Status::unknown) ? "t-subnorm status unknown" : nv.evidence.front(),
                            std::max(ts.resolution, nv.resolution));
    }
    set(Property::t_norm, tn);

    Verdict pr;
    Value f11 = F_(1, 1);
    if (ts.is(Status::no)) pr = Verdict::no({"not a t-subnorm"}, ts.witness, ts.value_witness);
    else if (tn.is(Status::yes)) pr = Verdict::no({"F is a t-norm"});
    else if (ts.is(Status::yes) && tn.is(Status::no)) {
      pr = Verdict::yes({"t-subnorm that is not a t-norm", "F(1,1) = " + f11.str()});
    } else {
      pr = Verdict::unknown("t-subnorm or t-norm status unknown");
    }
    set(Property::proper, pr);

    const auto& ct = r_[Property::continuous];
    if (ts.is(Status::yes)) {
      Status below = lt(f11, Value(1)) == Truth::yes ? Status::yes : Status::no;
      r_.log("F(1,1) < 1 (for continuous F: proper iff F(1,1) < 1)", "F(1,1) = " + f11.str(), below,
             ct.is(Status::yes) ? ((below == Status::yes) == pr.is(Status::yes) ? "agrees" : "disagrees")
                                : "F not known to be continuous; properness decided by the neutral element");
    }
    if (ct.is(Status::yes) && ts.is(Status::yes)) {
      const auto& ar = r_[Property::archimedean];
      if (cc.status != Status::unknown)
        r_.notes.push_back(std::string("cross-check: continuous t-subnorm is Archimedean iff conditionally "
                                       "cancellative; archimedean ") +
                           std::string(to_string(ar.status)) + ", conditionally_cancellative " +
                           std::string(to_string(cc.status)));
    }
  }

  const PiecewiseMonotoneFn& f_;
  TNorm t_;
  GeneratedOp op_;
  BinaryOp F_;
  ClassifyOptions o_;
  ClassificationReport r_;
  std::optional<Decomposition> dec_;
  std::optional<IntervalSet> tmm_;
  std::optional<bool> tmm_ok_;
  std::optional<std::pair<Verdict, Verdict>> incl_;
  std::optional<std::vector<Rational>> cand_;
  std::unique_ptr<LawScanner> scanner_;
  std::optional<Verdict> neutral_;
};

}  // namespace detail

inline ClassificationReport classify(const PiecewiseMonotoneFn& f, const TNorm& t, ClassifyOptions o = {}) {
  return detail::ClassifierRun(f, t, o).run();
}

/// Continuity verdict alone (strictly increasing f, T strictly monotone and
/// continuous on Ran(f)²).
inline Verdict check_continuity(const PiecewiseMonotoneFn& f, const TNorm& t) {
  return detail::ClassifierRun(f, t, {}).check_continuity();
}

inline std::optional<ClassificationReport> check_degenerate(const PiecewiseMonotoneFn& f, const TNorm& t) {
  return detail::ClassifierRun(f, t, {}).check_degenerate();
}

/// Verdicts for (ii) and (iii); f must be non-decreasing.
inline std::pair<Verdict, Verdict> check_inclusion_conditions(const PiecewiseMonotoneFn& f, const TNorm& t) {
  return detail::ClassifierRun(f, t, {}).check_inclusion_conditions();
}

inline std::map<std::size_t, IntervalSet> h_k_sets(const PiecewiseMonotoneFn& f, const TNorm& t) {
  return detail::ClassifierRun(f, t, {}).h_k_sets();
}

inline Verdict check_prop_sufficient(const PiecewiseMonotoneFn& f, const TNorm& t) {
  return detail::ClassifierRun(f, t, {}).check_prop_sufficient();
}

inline Verdict l_set_check(const PiecewiseMonotoneFn& f, const TNorm& t, int n) {
  return detail::ClassifierRun(f, t, {}).l_set_check(n);
}

inline Verdict check_cancellative(const PiecewiseMonotoneFn& f, const TNorm& t) {
  return detail::ClassifierRun(f, t, {}).check_cancellative();
}

}  // namespace subnorm
