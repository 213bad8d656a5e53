// Copyright 2026 the tricross authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace tricross {

/// Exact enumeration constants for random planar triangulations and the
/// transition probabilities of the peeling process, all in exact rational
/// arithmetic.
///
/// Z_m is the partition function for free triangulations of an m-gon,
///   Z_m = 4 (2m-4)! / (9 m! (m-2)!) * (9/4)^m,  m >= 2,
/// and p_k = 9^{-k} Z_{k+1} is the half-plane probability of the revealed
/// triangle swallowing k boundary vertices on a given side.
///
/// Values up to the construction-time cache bounds are precomputed; larger
/// indices are evaluated on demand from the closed forms (the caches never
/// mutate, so a table can be shared freely across threads).
class EnumerationTable {
 public:
  explicit EnumerationTable(std::uint32_t z_cache_max = 4096,
                            std::uint32_t pk_cache_max = 4096);

  /// Z_m. Requires m >= 2.
  Rational z(std::uint64_t m) const;

  /// p_k = 9^{-k} Z_{k+1} = (2k-2)! / (4^k (k-1)! (k+1)!). Requires k >= 1.
  Rational pk(std::uint64_t k) const;

  /// Exact tail mass sum_{k > K} p_k = 1/6 - sum_{k <= K} p_k.
  Rational tail_mass(std::uint64_t K) const;

  /// Probability that a peel step in a free m-gon reveals an internal
  /// vertex: Z_{m+1} / (alpha Z_m) = (2m-3)/(3m+3). Requires m >= 2.
  Rational peel_internal_free(std::uint64_t m) const;

  /// Same for the uniform infinite triangulation of an m-gon:
  /// C_{m+1} / (alpha C_m) = (2m-1)/(3m-3). Requires m >= 3 (the m = 2
  /// value is degenerate and rejected).
  Rational peel_internal_uipt(std::uint64_t m) const;

  /// Probability of the peel step in a free m-gon connecting to the
  /// boundary vertex at distance k on a given side: Z_{k+1} Z_{m-k} / Z_m.
  /// One-sided: k in [1, m-2] enumerates every non-base vertex once.
  Rational peel_split_free(std::uint64_t m, std::uint64_t k) const;

  /// Disc-UIPT split probability Z_{k+1} C_{m-k} / C_m (the C-ratio is
  /// rational; the transcendental factors of C cancel). Requires m >= 4,
  /// k in [1, m-2].
  Rational peel_split_uipt(std::uint64_t m, std::uint64_t k) const;

  /// Exact C_b / C_a for 2 <= a, b. Built from the ratio recurrence
  /// C_{m+1}/C_m = (9/2)(2m-1)/(m-1).
  Rational c_ratio(std::uint64_t b, std::uint64_t a) const;

  /// Floating-point C_m (contains sqrt(pi) and 3^{7/2}; approximate,
  /// diagnostics only).
  static double c_approx(std::uint64_t m);

  /// Z_{n1} * Z_{n2} / Z_{n3} evaluated exactly for arbitrary indices.
  /// Used for one-step probabilities of boundary chains at large scale.
  Rational z_product_ratio(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) const;

  /// Z_m * 9^{-m} as an exact rational (magnitude ~ gamma' m^{-5/2}).
  Rational z_scaled(std::uint64_t m) const;

  std::uint32_t z_cache_max() const { return z_cache_max_; }
  std::uint32_t pk_cache_max() const { return pk_cache_max_; }

  static constexpr double kAlpha = 13.5;  // growth constant, exactly 27/2

 private:
  static Rational z_closed_form(std::uint64_t m);
  static Rational pk_closed_form(std::uint64_t k);

  std::uint32_t z_cache_max_;
  std::uint32_t pk_cache_max_;
  std::vector<Rational> zcache_;       // index m-2 -> Z_m
  std::vector<Rational> pkcache_;      // index k-1 -> p_k
  std::vector<Rational> pk_prefix_;    // index k-1 -> sum_{i<=k} p_i
};

}  // namespace tricross
