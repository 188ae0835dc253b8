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
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "subnorm/classifier.hpp"
#include "subnorm/decomposition.hpp"
#include "subnorm/generated_op.hpp"
#include "subnorm/laws.hpp"
#include "subnorm/scan.hpp"
#include "subnorm/verdict.hpp"

namespace subnorm {

/// {0, 1/n, ..., 1} ∪ extra, sorted and deduplicated.
inline std::vector<Rational> grid(int n, const std::vector<Rational>& extra = {}) {
  if (n < 1) throw DomainError("grid resolution must be at least 1");
  std::set<Rational> s;
  for (int i = 0; i <= n; ++i) s.insert(Rational(i, n));
  for (const auto& x : extra) {
    require_unit(x, "grid point");
    s.insert(x);
  }
  return {s.begin(), s.end()};
}

/// Breakpoints of f and the pseudo-inverse images of every gap endpoint b_k,
/// d_k and representative c_k.
inline std::vector<Rational> grid_extras(const PiecewiseMonotoneFn& f) {
  std::vector<Rational> extra = f.breakpoints();
  if (!f.non_decreasing()) return extra;
  auto finv = pseudo_inverse(f);
  for (const auto& g : decompose(f).s)
    for (const auto& v : {g.b, g.d, g.c}) extra.push_back(finv(v));
  return extra;
}

inline std::vector<Rational> grid_for(const PiecewiseMonotoneFn& f, int n) { return grid(n, grid_extras(f)); }

/// Ok, a counterexample, or (enclosure families only) undecided.
struct OracleResult {
  ScanResult scan;

  bool ok() const { return scan.violated == Truth::no; }
  bool counterexample() const { return scan.violated == Truth::yes; }
  /// A counterexample that refutes the property outright (Archimedean
  /// instances count only at an exact fixed point).
  bool conclusive() const { return counterexample() && scan.first && scan.first->conclusive; }
  std::string str() const {
    if (ok()) return "Ok";
    std::string s = counterexample() ? "Counterexample " : "Undecided ";
    return scan.first ? s + scan.first->str() : s;
  }
};

inline OracleResult check_property(const BinaryOp& op, const PropertyName& p, const std::vector<Rational>& pts) {
  LawScanner sc(op, pts);
  return {sc.run(p)};
}

/// Laws whose conjunction defines each property, as checked by the oracle.
inline std::vector<Law> laws_for(Property p) {
  const std::vector<Law> sub{Law::commutativity, Law::monotonicity, Law::bounded_by_min, Law::associativity};
  auto with = [&](Law l) {
    auto v = sub;
    v.push_back(l);
    return v;
  };
  switch (p) {
    case Property::t_subnorm: return sub;
    case Property::t_norm: return with(Law::neutral_one);
    case Property::conditionally_cancellative: return with(Law::conditional_cancellation);
    case Property::cancellative: return with(Law::cancellation);
    case Property::strictly_monotone_op: return {Law::strict_monotonicity};
    case Property::archimedean: return {Law::archimedean};
    case Property::continuous: return {};
    case Property::proper: return sub;
  }
  return {};
}

struct AgreementRow {
  Property property;
  Status classifier = Status::unknown;
  std::string classifier_summary;
  /// Empty when the property has no grid law (continuity).
  std::optional<OracleResult> oracle;
  std::optional<Law> failing_law;
  bool hard_failure = false;

  std::string oracle_str() const { return oracle ? oracle->str() : "n/a"; }
};

struct HarnessReport {
  ClassificationReport classification;
  std::map<Law, OracleResult> laws;
  std::vector<AgreementRow> rows;
  std::size_t grid_size = 0;
  int n = 0;

  int hard_failures() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.hard_failure; }));
  }
};

/**
 * Classifies (f,t), then runs every law through the oracle on grid_for(f,n).
 * A hard failure is a classifier Yes against a conclusive oracle
 * counterexample.
 */
inline HarnessReport consistency_harness(const PiecewiseMonotoneFn& f, const TNorm& t, int n,
                                         ClassifyOptions opts = {}) {
  HarnessReport h;
  h.n = n;
  h.classification = classify(f, t, opts);
  GeneratedOp op(f, t);
  LawScanner sc(op.as_op(), grid_for(f, n));
  h.grid_size = sc.points().size();
  for (const auto& p : all_laws()) {
    PropertyName pn = p;
    if (pn.law == Law::archimedean) pn.n_iter = opts.arch_cap;
    h.laws.emplace(pn.law, OracleResult{sc.run(pn)});
  }
  for (Property p : all_properties()) {
    AgreementRow row{p, h.classification.status(p), h.classification[p].summary(), std::nullopt, std::nullopt, false};
    auto laws = laws_for(p);
    if (!laws.empty()) {
      std::optional<OracleResult> first_bad, first_undecided;
      for (Law l : laws) {
        const auto& r = h.laws.at(l);
        if (r.counterexample() && !first_bad) {
          first_bad = r;
          row.failing_law = l;
        } else if (!r.ok() && !first_undecided) {
          first_undecided = r;
        }
      }
      row.oracle = first_bad ? *first_bad : first_undecided ? *first_undecided : h.laws.at(laws.front());
      row.hard_failure = row.classifier == Status::yes && first_bad && first_bad->conclusive();
    }
    h.rows.push_back(std::move(row));
  }
  return h;
}

}  // namespace subnorm
