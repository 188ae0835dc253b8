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

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "subnorm/decomposition.hpp"
#include "subnorm/oracle.hpp"
#include "subnorm/verdict.hpp"

namespace subnorm {

using Json = nlohmann::ordered_json;

/// K₁ as 1-based gap indices.
inline std::string k1_str(const Decomposition& d) {
  if (d.k1.empty()) return "∅";
  std::string s = "{";
  for (std::size_t i = 0; i < d.k1.size(); ++i) s += (i ? "," : "") + std::to_string(d.k1[i] + 1);
  return s + "}";
}

inline std::string render_text(const Decomposition& d) {
  std::ostringstream os;
  os << "M=" << d.m.str() << " S={";
  for (std::size_t k = 0; k < d.s.size(); ++k) os << (k ? "," : "") << "[" << d.s[k].b << "," << d.s[k].d << "]";
  os << "} C=" << IntervalSet::points(d.c).str() << "\n";
  os << "Q=" << d.q.str() << " K1=" << k1_str(d) << "\n";
  for (std::size_t k = 0; k < d.s.size(); ++k)
    os << "gap " << k + 1 << ": b=" << d.s[k].b << " d=" << d.s[k].d << " c=" << d.s[k].c << "\n";
  os << "f(0+)=" << d.f0plus << " f(1-)=" << d.f1minus << " tau=" << d.tau << " upsilon=" << d.upsilon << "\n";
  return os.str();
}

inline Json to_json(const Decomposition& d) {
  Json s = Json::array();
  for (const auto& g : d.s) s.push_back({{"b", g.b.str()}, {"d", g.d.str()}, {"c", g.c.str()}});
  Json k1 = Json::array();
  for (auto k : d.k1) k1.push_back(k + 1);
  return {{"m", d.m.str()},          {"s", s},
          {"c", IntervalSet::points(d.c).str()},
          {"q", d.q.str()},          {"f0plus", d.f0plus.str()},
          {"f1minus", d.f1minus.str()}, {"tau", d.tau.str()},
          {"upsilon", d.upsilon.str()}, {"k1", k1}};
}

inline Json to_json(const Counterexample& c) {
  Json in = Json::array();
  for (const auto& x : c.inputs) in.push_back(x.str());
  return {{"law", c.property.str()}, {"inputs", in},          {"lhs", c.lhs.str()},
          {"rhs", c.rhs.str()},      {"relation", c.relation}, {"conclusive", c.conclusive}};
}

inline Json to_json(const Verdict& v) {
  Json j{{"status", std::string(to_string(v.status))}, {"evidence", v.evidence}};
  if (v.at_resolution || v.resolution > 0) j["resolution"] = v.resolution;
  if (v.at_resolution) j["at_resolution"] = true;
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.value_witness.empty()) {
    Json vw = Json::array();
    for (const auto& x : v.value_witness) vw.push_back(x.str());
    j["value_witness"] = vw;
  }
  return j;
}

inline Json to_json(const ClassificationReport& r) {
  Json j{{"tnorm", r.tnorm}, {"function", r.function_text}, {"route", r.route}};
  Json verdicts = Json::object();
  for (Property p : all_properties())
    if (r.verdicts.count(p)) verdicts[std::string(to_string(p))] = to_json(r[p]);
  j["verdicts"] = verdicts;
  j["decomposition"] = r.decomposition ? to_json(*r.decomposition) : Json(nullptr);
  Json log = Json::array();
  for (const auto& c : r.conditions_log)
    log.push_back({{"condition", c.condition},
                   {"values", c.values},
                   {"outcome", std::string(to_string(c.outcome))},
                   {"detail", c.detail}});
  j["conditions_log"] = log;
  j["notes"] = r.notes;
  return j;
}

inline std::string render_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "T: " << r.tnorm << "\nroute: " << r.route << "\n\n";
  for (Property p : all_properties()) {
    if (!r.verdicts.count(p)) continue;
    const auto& v = r[p];
    os << to_string(p) << ": " << v.summary() << "\n";
    for (const auto& e : v.evidence) os << "    " << e << "\n";
    if (v.witness) os << "    witness: " << v.witness->str() << "\n";
    if (!v.value_witness.empty()) {
      os << "    values:";
      for (const auto& x : v.value_witness) os << " " << x;
      os << "\n";
    }
  }
  if (r.decomposition) os << "\ndecomposition:\n" << render_text(*r.decomposition);
  if (!r.conditions_log.empty()) {
    os << "\nconditions:\n";
    for (const auto& c : r.conditions_log) {
      os << "  [" << to_string(c.outcome) << "] " << c.condition;
      if (!c.values.empty()) os << "\n      " << c.values;
      if (!c.detail.empty()) os << "\n      " << c.detail;
      os << "\n";
    }
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

inline Json to_json(const OracleResult& o) {
  Json j{{"result", o.ok() ? "Ok" : o.counterexample() ? "Counterexample" : "Undecided"},
         {"examined", o.scan.examined}};
  if (o.scan.first) j["counterexample"] = to_json(*o.scan.first);
  return j;
}

inline Json to_json(const HarnessReport& h) {
  Json laws = Json::object();
  for (const auto& [law, res] : h.laws) {
    std::string name = PropertyName{law}.str();
    laws[name.substr(0, name.find('('))] = to_json(res);
  }
  Json rows = Json::array();
  for (const auto& r : h.rows) {
    Json row{{"property", std::string(to_string(r.property))},
             {"classifier", r.classifier_summary},
             {"oracle", r.oracle ? (r.oracle->ok() ? "Ok" : r.oracle->counterexample() ? "Counterexample" : "Undecided")
                                 : "n/a"},
             {"hard_failure", r.hard_failure}};
    if (r.failing_law) row["failing_law"] = PropertyName{*r.failing_law}.str();
    rows.push_back(row);
  }
  return {{"n", h.n},         {"grid_size", h.grid_size}, {"laws", laws},
          {"agreement", rows}, {"hard_failures", h.hard_failures()}, {"classification", to_json(h.classification)}};
}

inline std::string render_text(const HarnessReport& h) {
  std::ostringstream os;
  os << "oracle grid: n=" << h.n << " (" << h.grid_size << " points incl. breakpoints)\n\nlaws:\n";
  for (const auto& [law, res] : h.laws) os << "  " << PropertyName{law}.str() << ": " << res.str() << "\n";
  os << "\nagreement:\n";
  for (const auto& r : h.rows) {
    os << "  " << to_string(r.property) << ": classifier " << r.classifier_summary << " | oracle ";
    if (!r.oracle) os << "n/a";
    else if (r.oracle->ok()) os << "Ok";
    else if (r.failing_law) os << "Counterexample (" << PropertyName{*r.failing_law}.str() << ")";
    else os << "Undecided";
    if (r.hard_failure) os << "  HARD FAILURE";
    os << "\n";
  }
  os << "\nhard failures: " << h.hard_failures() << "\n";
  return os.str();
}

}  // namespace subnorm
