// Copyright 2026 the tricross authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace tricross {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.  Arithmetic is exact.  Thin value-type wrapper
/// around GMP's mpq_t.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long num, unsigned long den) {
    mpq_init(q_);
    mpq_set_si(q_, num, den);
    mpq_canonicalize(q_);
  }
  explicit Rational(long num) : Rational(num, 1) {}

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "num/den" or "num".  Throws std::invalid_argument on bad input.
  static Rational from_string(const std::string& s);

  /// n! as a rational (integer-valued).
  static Rational factorial(unsigned long n);

  /// base^exp, exp may be negative (base must be nonzero then).
  static Rational pow(const Rational& base, long exp);

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }

  double to_double() const { return mpq_get_d(q_); }

  /// Lowest-terms decimal rendering: "num/den", or just "num" when den == 1.
  std::string to_string() const;

  std::string numerator_string() const;
  std::string denominator_string() const;

  /// Raw handle, for the few call sites that drive GMP directly.
  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

}  // namespace tricross
