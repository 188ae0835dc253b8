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

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subnorm {

/// Raised for malformed textual input (rationals, intervals, function files,
/// t-norm descriptors).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an argument lies outside [0,1] or a parameter outside its range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Arbitrary-precision signed fraction, always kept in lowest terms with a
 * positive denominator.
 *
 * Thin value wrapper over GMP's mpq_class so that expression templates never
 * leak into the rest of the library.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(mpq_class&& q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses `p/q`, `p`, or a finite decimal such as `0.125`.
  static Rational parse(std::string_view text) {
    std::string s(trim(text));
    if (s.empty()) throw ParseError("empty rational");
    try {
      if (auto dot = s.find('.'); dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw ParseError("mixed decimal and fraction: " + s);
        bool neg = s[0] == '-';
        std::string body = (neg || s[0] == '+') ? s.substr(1) : s;
        dot = body.find('.');
        std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("bad decimal: " + s);
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
        mpq_class q(neg ? mpz_class(-num) : num, den);
        return Rational(std::move(q));
      }
      auto slash = s.find('/');
      std::string ns = s.substr(0, slash);
      std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
      if (!valid_int(ns) || !valid_int(ds)) throw ParseError("bad rational: " + s);
      mpz_class den(strip_plus(ds), 10);
      if (den == 0) throw ParseError("zero denominator: " + s);
      return Rational(mpq_class(mpz_class(strip_plus(ns), 10), den));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational: " + s);
    }
  }

  const mpq_class& gmp() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// `p/q` rendering, or just `p` for integers.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Fixed-point decimal rendering with `digits` fractional digits (rounded
  /// half away from zero).
  std::string decimal(int digits = 12) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class scaled = q_ * scale;
    mpz_class n = scaled.get_num(), d = scaled.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class rounded = (2 * n + d) / (2 * d);
    std::string s = rounded.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    if (neg && rounded != 0) s.insert(0, "-");
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  }
  static bool valid_int(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
  }
  static std::string strip_plus(const std::string& s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; }

  mpq_class q_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

inline bool in_unit(const Rational& x) { return x.sign() >= 0 && x <= Rational(1); }

inline void require_unit(const Rational& x, std::string_view what = "argument") {
  if (!in_unit(x)) throw DomainError(std::string(what) + " " + x.str() + " outside [0,1]");
}

}  // namespace subnorm
