// Copyright 2026 the tricross authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rng.hpp"

namespace tricross {

class EnumerationTable;

/// The boundary random walk of the half-plane peeling process.
///
/// Lazy step law: 0 with probability 1/2, +1 with probability 1/3, -k with
/// probability p_k (k >= 1). The non-lazy version conditions out the zero
/// step (+1 w.p. 2/3, -k w.p. 2 p_k); both have the same hitting law and
/// the solvers and races use the non-lazy chain.
///
/// Down-jumps are sampled by inverse CDF against a finite head table,
/// extended past the table by the exact tail ratio p_{k+1}/p_k =
/// (2k-1)/(2(k+2)); there is no truncation bias. Far beyond the table
/// (residual tail mass < ~1e-9 of a draw) an asymptotic inversion of
/// the k^{-3/2} tail is used.
class StepDistribution {
 public:
  explicit StepDistribution(std::uint32_t head_size = 1u << 20);

  /// One lazy step: 0, +1, or -k.
  std::int64_t sample(Rng& rng) const;

  /// One non-lazy step: +1 or -k.
  std::int64_t sample_nonlazy(Rng& rng) const;

  /// Down-jump size conditioned on a down step.
  std::uint64_t sample_down(Rng& rng) const;

  /// p_k in double precision (exact-seeded ratio recurrence).
  double p(std::uint64_t k) const;

  /// tail(K) = sum_{k > K} p_k in double precision.
  double tail(std::uint64_t K) const;

  std::uint32_t head_size() const { return head_size_; }

  /// k^{-5/2} tail coefficient of p_k: p_k ~ kPkTailCoef * k^{-5/2}.
  static const double kPkTailCoef;  // 1/(4 sqrt(pi))

 private:
  friend class LadderOvershootSampler;
  std::uint64_t down_from_residual(double u) const;  // u in [0, 1/6)

  std::uint32_t head_size_;
  std::vector<double> p_;        // p_[k] = p_k, k = 1..head_size
  std::vector<double> cum_;      // cum_[k] = sum_{i<=k} p_i
  std::vector<double> tail_;     // tail_[K] = sum_{k>K} p_k, K = 0..head_size
};

/// Exact sampler for the overshoot |S_{T_-}| of the walk started at any
/// positive height, via descending-ladder renewals.
///
/// The depth D of one strict descending record satisfies
///   P(D = d) = 3 * sum_{k >= d} p_k   (d >= 1),
/// i.e. the overshoot law from height 1 is three times the step tail.
/// Successive records are i.i.d., so the overshoot from height x is the
/// renewal overshoot of the D-sums over level x. A draw costs O(sqrt(x))
/// ladder steps instead of a full path simulation (whose expected length
/// is infinite).
class LadderOvershootSampler {
 public:
  explicit LadderOvershootSampler(const StepDistribution& dist);

  /// Depth of one descending record.
  std::uint64_t sample_depth(Rng& rng) const;

  /// |S_{T_-}| for the walk started at `start` >= 1.
  std::uint64_t sample_overshoot(std::uint64_t start, Rng& rng) const;

 private:
  const StepDistribution* dist_;
  std::vector<double> depth_cdf_;  // P(D <= d), d = 1..table
  double tail_a_, tail_b_;         // P(D > d) ~ a d^{-1/2} + b d^{-3/2} past table
};

/// Result of one first-passage run.
struct FirstPassageRecord {
  std::uint64_t hit_time = 0;    // steps taken (lazy steps included)
  std::uint64_t overshoot = 0;   // |S_{T_-}|
  std::uint64_t max_height = 0;  // running maximum, diagnostic
  bool budget_exhausted = false; // step budget hit before passage
  bool resolved = false;         // overshoot completed by the ladder sampler
};

struct FirstPassageOptions {
  std::uint64_t budget = 100'000'000;  // steps per run
  bool lazy = true;                    // count lazy steps in hit_time
  // When the budget runs out, finish the overshoot with the (law-exact)
  // ladder sampler instead of reporting an unresolved run. hit_time then
  // only means "> budget".
  const LadderOvershootSampler* resolve_tail = nullptr;
};

FirstPassageRecord run_first_passage(std::uint64_t start, const StepDistribution& dist,
                                     Rng& rng, const FirstPassageOptions& opt = {});

/// Outcome of racing two independent walks to their first passage.
struct RaceOutcome {
  int loser = -1;                   // 0: first walk hit first, 1: second; -1 undetermined
  std::uint64_t loser_overshoot = 0;
  std::uint64_t survivor_value = 0; // other walk's position at that moment
  std::uint64_t events = 0;
  bool undetermined = false;
};

enum class RaceScheduler {
  kBernoulli,   // each event picks a walk with probability rate/(sum of rates)
  kExpClocks,   // explicit exponential clocks; same embedded chain
};

struct RaceOptions {
  std::uint64_t budget = 100'000'000;  // events total
  double rate_ratio = 1.0;             // rate of walk 1 / rate of walk 2
  RaceScheduler scheduler = RaceScheduler::kBernoulli;
};

/// Runs two independent non-lazy walks from (a, b), one step per event on
/// the walk chosen by the scheduler, until one of them first reaches a
/// non-positive value. Ties are impossible (one walk moves per event).
RaceOutcome two_walk_race(std::uint64_t a, std::uint64_t b, const StepDistribution& dist,
                          Rng& rng, const RaceOptions& opt = {});

}  // namespace tricross
