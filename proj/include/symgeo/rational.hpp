// Copyright 2026 The Symgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact scalars: arbitrary-precision rationals, dyadic rationals, and the two
// exact predicates the metric layer relies on.

#ifndef SYMGEO_RATIONAL_HPP
#define SYMGEO_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "symgeo/errors.hpp"

namespace symgeo {

namespace detail {

// Minimal scanner shared by the literal parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t offset = 0)
      : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t position() const { return offset_ + pos_; }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  void expect_end() {
    skip_space();
    if (!done()) fail("unexpected trailing input");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(position(), what); }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// An exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ModelError("nonzero_denominator", "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ModelError("nonzero_divisor", "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  // "p/q", or "p" when q == 1.
  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  static Rational parse(std::string_view text) {
    detail::Cursor cur(text);
    Rational r = parse_from(cur);
    cur.expect_end();
    return r;
  }

  // Reads "[+-]digits[/digits]" at the cursor.
  static Rational parse_from(detail::Cursor& cur) {
    cur.skip_space();
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else {
      cur.accept('+');
    }
    cur.skip_space();
    mpz_class num(cur.digits());
    mpz_class den = 1;
    if (cur.accept('/')) {
      cur.skip_space();
      std::size_t at = cur.position();
      den = mpz_class(cur.digits());
      if (den == 0) throw ParseError(at, "zero denominator");
    }
    if (negative) num = -num;
    return Rational(num, den);
  }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational square(const Rational& r) { return r * r; }

// Largest integer not exceeding r.
inline mpz_class floor(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return out;
}

// m / 2^n, canonical when m is odd or n == 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(mpz_class m, unsigned n) : m_(std::move(m)), n_(n) {
    while (n_ > 0 && mpz_even_p(m_.get_mpz_t())) {
      m_ /= 2;
      --n_;
    }
  }

  const mpz_class& numerator() const { return m_; }
  unsigned exponent() const { return n_; }

  Rational value() const {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n_);
    return Rational(m_, den);
  }

  Dyadic operator-() const { return Dyadic(-m_, n_); }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;

  std::string str() const { return value().str(); }

 private:
  mpz_class m_ = 0;
  unsigned n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

// m/2^n with m = floor(lambda * 2^n); the result r satisfies r <= lambda < r + 2^-n.
inline Dyadic dyadic_floor(const Rational& lambda, unsigned n) {
  mpz_class scaled = lambda.num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), n);
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), lambda.den().get_mpz_t());
  return Dyadic(std::move(m), n);
}

// Exact ordering of sqrt(q1) + sqrt(q2) against sqrt(q3) for nonnegative
// arguments. Both sides are nonnegative, so squaring preserves the order:
// compare 2*sqrt(q1*q2) with r = q3 - q1 - q2, and square once more when r >= 0.
inline std::strong_ordering cmp_sum_of_sqrts(const Rational& q1, const Rational& q2,
                                             const Rational& q3) {
  if (q1.sign() < 0 || q2.sign() < 0 || q3.sign() < 0) {
    throw ModelError("nonnegative_radicands", "cmp_sum_of_sqrts takes nonnegative arguments");
  }
  const Rational r = q3 - q1 - q2;
  if (r.sign() < 0) return std::strong_ordering::greater;
  const Rational lhs = Rational(4) * q1 * q2;
  const Rational rhs = r * r;
  return lhs <=> rhs;
}

}  // namespace symgeo

#endif  // SYMGEO_RATIONAL_HPP
