// Copyright 2026 the tricross authors
// SPDX-License-Identifier: Apache-2.0

#include "rational.hpp"

#include <memory>
#include <stdexcept>

namespace tricross {

Rational Rational::from_string(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
    throw std::invalid_argument("Rational::from_string: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    throw std::invalid_argument("Rational::from_string: zero denominator");
  mpq_canonicalize(r.q_);
  return r;
}

Rational Rational::factorial(unsigned long n) {
  Rational r;
  mpz_fac_ui(mpq_numref(r.q_), n);
  return r;
}

Rational Rational::pow(const Rational& base, long exp) {
  if (base.is_zero() && exp < 0)
    throw std::domain_error("Rational::pow: zero base with negative exponent");
  Rational r;
  unsigned long e = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), e);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), e);
  if (exp < 0) mpq_inv(r.q_, r.q_);
  // base was canonical, so num^e / den^e already is.
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

std::string Rational::to_string() const {
  std::unique_ptr<char, void (*)(void*)> buf(mpq_get_str(nullptr, 10, q_), &free);
  return std::string(buf.get());
}

std::string Rational::numerator_string() const {
  std::unique_ptr<char, void (*)(void*)> buf(mpz_get_str(nullptr, 10, mpq_numref(q_)), &free);
  return std::string(buf.get());
}

std::string Rational::denominator_string() const {
  std::unique_ptr<char, void (*)(void*)> buf(mpz_get_str(nullptr, 10, mpq_denref(q_)), &free);
  return std::string(buf.get());
}

}  // namespace tricross
