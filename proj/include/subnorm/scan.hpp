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
#include <array>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "subnorm/laws.hpp"
#include "subnorm/value.hpp"

namespace subnorm {

struct ScanResult {
  /// no: every examined instance holds; yes: a definite violation; unknown:
  /// only undecidable instances (enclosures overlapping a boundary, or an
  /// Archimedean sequence not witnessed within the cap).
  Truth violated = Truth::no;
  std::optional<Counterexample> first;
  std::uint64_t examined = 0;

  bool ok() const { return violated == Truth::no; }
};

/**
 * Exhaustive law checker over a finite point set. F is tabulated once on
 * pts×pts; associativity memoises F(v,·) and F(·,w) for the off-grid inner
 * values and splits the outer index across threads. The first violation in
 * lexicographic index order is reported, re-derived through check_instance.
 */
class LawScanner {
 public:
  LawScanner(BinaryOp op, std::vector<Rational> pts) : op_(std::move(op)), pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  const std::vector<Rational>& points() const { return pts_; }
  const BinaryOp& op() const { return op_; }

  const Value& at(std::size_t i, std::size_t j) {
    fill();
    return table_[i * pts_.size() + j];
  }

  ScanResult run(const PropertyName& p) {
    fill();
    const std::size_t m = pts_.size();
    ScanResult res;
    std::optional<Counterexample> first_unknown;
    // Returns true to stop scanning.
    auto record = [&](Truth v, std::vector<Rational> in) {
      if (v == Truth::no) return false;
      auto chk = check_instance(op_, p, in);
      if (chk.violated == Truth::yes) {
        res.violated = Truth::yes;
        res.first = chk.counterexample;
        return true;
      }
      if (chk.violated == Truth::unknown && !first_unknown) first_unknown = chk.counterexample;
      return false;
    };
    bool stop = false;
    switch (p.law) {
      case Law::commutativity:
        for (std::size_t i = 0; i < m && !stop; ++i)
          for (std::size_t j = 0; j < m && !stop; ++j) {
            ++res.examined;
            stop = record(!eq(at(i, j), at(j, i)), {pts_[i], pts_[j]});
          }
        break;
      case Law::monotonicity:
        for (std::size_t i = 0; i < m && !stop; ++i)
          for (std::size_t j = 0; j + 1 < m && !stop; ++j) {
            ++res.examined;
            Truth v = lt(at(i, j + 1), at(i, j)) || lt(at(j + 1, i), at(j, i));
            stop = record(v, {pts_[i], pts_[j], pts_[j + 1]});
          }
        break;
      case Law::bounded_by_min:
        for (std::size_t i = 0; i < m && !stop; ++i)
          for (std::size_t j = 0; j < m && !stop; ++j) {
            ++res.examined;
            stop = record(lt(Value(min(pts_[i], pts_[j])), at(i, j)), {pts_[i], pts_[j]});
          }
        break;
      case Law::associativity:
        associativity(res, first_unknown, p);
        break;
      case Law::neutral_one: {
        auto one = std::find(pts_.begin(), pts_.end(), Rational(1));
        if (one == pts_.end()) {
          for (std::size_t i = 0; i < m && !stop; ++i) {
            ++res.examined;
            stop = record(Truth::unknown, {pts_[i]});
          }
          break;
        }
        std::size_t j1 = static_cast<std::size_t>(one - pts_.begin());
        for (std::size_t i = 0; i < m && !stop; ++i) {
          ++res.examined;
          stop = record(!eq(at(i, j1), Value(pts_[i])), {pts_[i]});
        }
        break;
      }
      case Law::conditional_cancellation:
      case Law::cancellation:
      case Law::strict_monotonicity:
        for (std::size_t i = 0; i < m && !stop; ++i) {
          if (pts_[i].is_zero()) continue;
          for (std::size_t j = 0; j < m && !stop; ++j)
            for (std::size_t k = j + 1; k < m && !stop; ++k) {
              ++res.examined;
              const Value &a = at(i, j), &b = at(i, k);
              Truth v = p.law == Law::conditional_cancellation ? (eq(a, b) && positive(a))
                        : p.law == Law::cancellation           ? eq(a, b)
                                                               : !lt(a, b);
              stop = record(v, {pts_[i], pts_[j], pts_[k]});
            }
        }
        break;
      case Law::archimedean: {
        std::vector<std::size_t> inner;
        for (std::size_t i = 0; i < m; ++i)
          if (pts_[i].sign() > 0 && pts_[i] < Rational(1)) inner.push_back(i);
        if (inner.empty()) break;
        const Rational& lowest = pts_[inner.front()];
        for (std::size_t i : inner) {
          if (stop) break;
          auto seq = power_sequence(op_, pts_[i], p.n_iter, lowest);
          for (std::size_t j : inner) {
            if (stop) break;
            ++res.examined;
            Truth reached = Truth::no;
            for (const auto& v : seq) {
              reached = reached || lt(v, Value(pts_[j]));
              if (reached == Truth::yes) break;
            }
            stop = record(!reached, {pts_[i], pts_[j]});
          }
        }
        break;
      }
    }
    if (res.violated != Truth::yes && first_unknown) {
      res.violated = Truth::unknown;
      res.first = first_unknown;
    }
    return res;
  }

 private:
  using Key = std::pair<Rational, Rational>;

  void fill() {
    if (!table_.empty() || pts_.empty()) return;
    const std::size_t m = pts_.size();
    table_.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) table_.push_back(op_(pts_[i], pts_[j]));
  }

  struct Memo {
    std::map<Key, std::vector<Value>> left, right;
  };

  /// Triples with outer index in [i0, i1); stops at the first definite
  /// violation.
  struct Chunk {
    std::optional<std::array<std::size_t, 3>> hit, unknown;
  };

  Chunk assoc_chunk(std::size_t i0, std::size_t i1) const {
    const std::size_t m = pts_.size();
    Memo memo;
    Chunk c;
    for (std::size_t i = i0; i < i1; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          const Value& lhs = left_of(memo, table_[i * m + j], k);
          const Value& rhs = right_of(memo, i, table_[j * m + k]);
          Truth v = !eq(lhs, rhs);
          if (v == Truth::yes) {
            c.hit = {i, j, k};
            return c;
          }
          if (v == Truth::unknown && !c.unknown) c.unknown = {i, j, k};
        }
    return c;
  }

  void associativity(ScanResult& res, std::optional<Counterexample>& first_unknown, const PropertyName& p) const {
    const std::size_t m = pts_.size();
    std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    workers = std::min(workers, std::max<std::size_t>(m / 8, 1));
    std::vector<std::future<Chunk>> jobs;
    std::vector<std::size_t> bounds;
    for (std::size_t w = 0; w <= workers; ++w) bounds.push_back(m * w / workers);
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                [this, a = bounds[w], b = bounds[w + 1]] { return assoc_chunk(a, b); }));
    std::vector<Chunk> chunks;
    for (auto& j : jobs) chunks.push_back(j.get());
    auto inputs = [&](const std::array<std::size_t, 3>& t) {
      return std::vector<Rational>{pts_[t[0]], pts_[t[1]], pts_[t[2]]};
    };
    res.examined = m * m * m;
    for (const auto& c : chunks) {
      if (c.unknown && !first_unknown && (!c.hit || c.unknown < c.hit))
        first_unknown = check_instance(op_, p, inputs(*c.unknown)).counterexample;
      if (c.hit) {
        const auto& t = *c.hit;
        res.examined = (t[0] * m + t[1]) * m + t[2] + 1;
        res.violated = Truth::yes;
        res.first = check_instance(op_, p, inputs(t)).counterexample;
        return;
      }
    }
  }

  /// F(v, pts[k]).
  const Value& left_of(Memo& memo, const Value& v, std::size_t k) const {
    auto& row = memo.left[{v.lo(), v.hi()}];
    if (row.empty()) {
      row.reserve(pts_.size());
      for (const auto& z : pts_) row.push_back(apply_monotone(op_, v, z));
    }
    return row[k];
  }
  /// F(pts[i], w).
  const Value& right_of(Memo& memo, std::size_t i, const Value& w) const {
    auto& col = memo.right[{w.lo(), w.hi()}];
    if (col.empty()) {
      col.reserve(pts_.size());
      for (const auto& x : pts_) col.push_back(apply_monotone(op_, x, w));
    }
    return col[i];
  }

  BinaryOp op_;
  std::vector<Rational> pts_;
  std::vector<Value> table_;
};

}  // namespace subnorm
