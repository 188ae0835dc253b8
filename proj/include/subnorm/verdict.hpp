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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subnorm/decomposition.hpp"
#include "subnorm/laws.hpp"
#include "subnorm/rational.hpp"

namespace subnorm {

enum class Status { yes, no, unknown };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::yes: return "Yes";
    case Status::no: return "No";
    case Status::unknown: return "Unknown";
  }
  return {};
}

enum class Property {
  t_subnorm,
  t_norm,
  conditionally_cancellative,
  cancellative,
  strictly_monotone_op,
  archimedean,
  continuous,
  proper,
};

inline const std::array<Property, 8>& all_properties() {
  static const std::array<Property, 8> v{Property::t_subnorm,     Property::t_norm,
                                         Property::conditionally_cancellative,
                                         Property::cancellative,  Property::strictly_monotone_op,
                                         Property::archimedean,   Property::continuous,
                                         Property::proper};
  return v;
}

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::t_subnorm: return "t_subnorm";
    case Property::t_norm: return "t_norm";
    case Property::conditionally_cancellative: return "conditionally_cancellative";
    case Property::cancellative: return "cancellative";
    case Property::strictly_monotone_op: return "strictly_monotone_op";
    case Property::archimedean: return "archimedean";
    case Property::continuous: return "continuous";
    case Property::proper: return "proper";
  }
  return {};
}

/**
 * Three-valued verdict.
 *
 * Yes lists the conditions verified exactly. No carries a law witness that
 * re-evaluation through F reproduces, and/or a value-level tuple (points of
 * the range) behind a set condition. Unknown states the reason and the
 * resolution reached.
 */
struct Verdict {
  Status status = Status::unknown;
  std::vector<std::string> evidence;
  std::optional<Counterexample> witness;
  std::vector<Rational> value_witness;
  int resolution = 0;
  bool at_resolution = false;

  static Verdict yes(std::vector<std::string> ev) { return {Status::yes, std::move(ev), std::nullopt, {}, 0, false}; }
  static Verdict no(std::vector<std::string> ev, std::optional<Counterexample> w = std::nullopt,
                    std::vector<Rational> vw = {}) {
    return {Status::no, std::move(ev), std::move(w), std::move(vw), 0, false};
  }
  static Verdict unknown(std::string reason, int resolution = 0) {
    return {Status::unknown, {std::move(reason)}, std::nullopt, {}, resolution, false};
  }

  bool is(Status s) const { return status == s; }

  std::string summary() const {
    std::string s(to_string(status));
    if (at_resolution) s += " (at resolution " + std::to_string(resolution) + ")";
    else if (status == Status::unknown && resolution > 0) s += " (resolution " + std::to_string(resolution) + ")";
    return s;
  }
};

/// One line of the conditions log: the condition, the set it produced, and
/// its outcome.
struct ConditionRecord {
  std::string condition;
  std::string values;
  Status outcome = Status::unknown;
  std::string detail;
};

struct ClassificationReport {
  std::string function_text;
  std::string tnorm;
  std::map<Property, Verdict> verdicts;
  std::optional<Decomposition> decomposition;
  std::vector<ConditionRecord> conditions_log;
  std::vector<std::string> notes;
  std::string route;

  const Verdict& operator[](Property p) const { return verdicts.at(p); }
  Verdict& operator[](Property p) { return verdicts[p]; }
  Status status(Property p) const { return verdicts.at(p).status; }

  void log(std::string condition, std::string values, Status outcome, std::string detail = {}) {
    conditions_log.push_back({std::move(condition), std::move(values), outcome, std::move(detail)});
  }
};

}  // namespace subnorm
