// Copyright 2026 the tricross authors
// SPDX-License-Identifier: Apache-2.0

#include "enumeration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tricross {

namespace {

const Rational kOneSixth(1, 6);
const Rational kNineFourths(9, 4);
const Rational kAlphaExact(27, 2);

}  // namespace

Rational EnumerationTable::z_closed_form(std::uint64_t m) {
  if (m < 2) throw std::domain_error("Z_m requires m >= 2");
  // 4 (2m-4)! / (9 m! (m-2)!) * (9/4)^m
  Rational r = Rational::factorial(2 * m - 4) * Rational(4);
  r /= Rational::factorial(m) * Rational::factorial(m - 2) * Rational(9);
  r *= Rational::pow(kNineFourths, static_cast<long>(m));
  return r;
}

Rational EnumerationTable::pk_closed_form(std::uint64_t k) {
  if (k < 1) throw std::domain_error("p_k requires k >= 1");
  // (2k-2)! / (4^k (k-1)! (k+1)!)
  Rational r = Rational::factorial(2 * k - 2);
  r /= Rational::factorial(k - 1) * Rational::factorial(k + 1);
  r /= Rational::pow(Rational(4), static_cast<long>(k));
  return r;
}

EnumerationTable::EnumerationTable(std::uint32_t z_cache_max, std::uint32_t pk_cache_max)
    : z_cache_max_(z_cache_max < 4 ? 4 : z_cache_max),
      pk_cache_max_(pk_cache_max < 4 ? 4 : pk_cache_max) {
  zcache_.reserve(z_cache_max_ - 1);
  zcache_.push_back(Rational(9, 8));  // Z_2
  // Z_{m+1} = Z_m * 9(2m-3) / (2(m+1))
  for (std::uint64_t m = 2; m < z_cache_max_; ++m)
    zcache_.push_back(zcache_.back() * Rational(9 * (2 * static_cast<long>(m) - 3), 2 * (m + 1)));

  pkcache_.reserve(pk_cache_max_);
  pk_prefix_.reserve(pk_cache_max_);
  pkcache_.push_back(Rational(1, 8));  // p_1
  pk_prefix_.push_back(pkcache_.back());
  // p_{k+1} = p_k * (2k-1) / (2(k+2))
  for (std::uint64_t k = 1; k < pk_cache_max_; ++k) {
    pkcache_.push_back(pkcache_.back() *
                       Rational(2 * static_cast<long>(k) - 1, 2 * (k + 2)));
    pk_prefix_.push_back(pk_prefix_.back() + pkcache_.back());
  }
}

Rational EnumerationTable::z(std::uint64_t m) const {
  if (m < 2) throw std::domain_error("Z_m requires m >= 2");
  if (m <= z_cache_max_) return zcache_[m - 2];
  return z_closed_form(m);
}

Rational EnumerationTable::pk(std::uint64_t k) const {
  if (k < 1) throw std::domain_error("p_k requires k >= 1");
  if (k <= pk_cache_max_) return pkcache_[k - 1];
  return pk_closed_form(k);
}

Rational EnumerationTable::tail_mass(std::uint64_t K) const {
  if (K == 0) return kOneSixth;
  if (K <= pk_cache_max_) return kOneSixth - pk_prefix_[K - 1];
  // Extend the exact prefix sum past the cache.
  Rational sum = pk_prefix_.back();
  Rational p = pkcache_.back();
  for (std::uint64_t k = pk_cache_max_; k < K; ++k) {
    p *= Rational(2 * static_cast<long>(k) - 1, 2 * (k + 2));
    sum += p;
  }
  return kOneSixth - sum;
}

Rational EnumerationTable::peel_internal_free(std::uint64_t m) const {
  if (m < 2) throw std::domain_error("peel_internal_free requires m >= 2");
  return Rational(2 * static_cast<long>(m) - 3, 3 * m + 3);
}

Rational EnumerationTable::peel_internal_uipt(std::uint64_t m) const {
  if (m < 3) throw std::domain_error("peel_internal_uipt requires m >= 3");
  return Rational(2 * static_cast<long>(m) - 1, 3 * m - 3);
}

Rational EnumerationTable::peel_split_free(std::uint64_t m, std::uint64_t k) const {
  if (m < 2 || k < 1 || k > m - 2)
    throw std::domain_error("peel_split_free requires m >= 2, 1 <= k <= m-2");
  return z(k + 1) * z(m - k) / z(m);
}

Rational EnumerationTable::c_ratio(std::uint64_t b, std::uint64_t a) const {
  if (a < 2 || b < 2) throw std::domain_error("C_m ratios require indices >= 2");
  // C_{m+1}/C_m = (9/2)(2m-1)/(m-1)
  Rational r(1);
  for (std::uint64_t m = (a < b ? a : b); m < (a < b ? b : a); ++m)
    r *= Rational(9 * (2 * static_cast<long>(m) - 1), 2 * (m - 1));
  if (a < b) return r;
  return Rational(1) / r;
}

Rational EnumerationTable::peel_split_uipt(std::uint64_t m, std::uint64_t k) const {
  if (m < 4 || k < 1 || k > m - 2)
    throw std::domain_error("peel_split_uipt requires m >= 4, 1 <= k <= m-2");
  return z(k + 1) * c_ratio(m - k, m);
}

double EnumerationTable::c_approx(std::uint64_t m) {
  if (m < 2) throw std::domain_error("C_m requires m >= 2");
  // 4 (2m-3)! / (3^{7/2} sqrt(pi) ((m-2)!)^2) * (9/4)^m, in log space.
  double lg = std::log(4.0) + std::lgamma(2.0 * m - 2.0) - 3.5 * std::log(3.0) -
              0.5 * std::log(std::numbers::pi) - 2.0 * std::lgamma(m - 1.0) +
              m * std::log(2.25);
  return std::exp(lg);
}

Rational EnumerationTable::z_product_ratio(std::uint64_t n1, std::uint64_t n2,
                                           std::uint64_t n3) const {
  return z(n1) * z(n2) / z(n3);
}

Rational EnumerationTable::z_scaled(std::uint64_t m) const {
  return z(m) * Rational::pow(Rational(9), -static_cast<long>(m));
}

}  // namespace tricross
