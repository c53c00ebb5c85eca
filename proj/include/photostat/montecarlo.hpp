// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "photostat/distributions.hpp"
#include "photostat/random.hpp"
#include "photostat/transmission.hpp"

namespace photostat {

__extension__ using uint128 = unsigned __int128;

struct RngSeed {
  std::uint64_t value = 0;
};

/// Estimates of <k> and <k^2> from `count` draws. stderr_second_moment is
/// computed from the sample variance of k^2.
struct SampleStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  double stderr_mean = 0.0;
  double stderr_second_moment = 0.0;
};

/// Exact integer sums of k, k^2 and k^4. Merging is associative and
/// commutative, so reductions are independent of trial scheduling.
class MomentAccumulator {
 public:
  void add(std::uint64_t k);
  void merge(const MomentAccumulator& other);
  /// Stats over `count` draws, where draws never passed to add() count as
  /// zeros. count must be at least the number of add() calls.
  [[nodiscard]] SampleStats stats(std::uint64_t count) const;
  [[nodiscard]] SampleStats stats() const { return stats(adds_); }

 private:
  std::uint64_t adds_ = 0;
  uint128 sum1_ = 0;
  uint128 sum2_ = 0;
  uint128 sum4_ = 0;
};

/// Inverse CDF of the geometric form: floor(ln u / ln(m / (1 + m))).
[[nodiscard]] std::uint64_t sample_bose_einstein(MeanOccupancy mean, Rng& rng);

/// Binomial(n, a) as n Bernoulli trials.
[[nodiscard]] std::uint64_t sample_binomial_bernoulli(std::uint64_t n, double a,
                                                      Rng& rng);
/// Binomial(n, a) by inversion from a single uniform: sequential search from
/// k = 0 while (1 - p)^n is representable, otherwise search outward from the
/// mode. Uses symmetry so the searched success probability is <= 1/2.
[[nodiscard]] std::uint64_t sample_binomial_inversion(std::uint64_t n, double a,
                                                      Rng& rng);
/// Bernoulli path for n <= 64, inversion above.
[[nodiscard]] std::uint64_t sample_binomial(std::uint64_t n, double a, Rng& rng);

inline constexpr std::uint64_t kBernoulliBinomialLimit = 64;

/// Independent: Binomial(n, a). Wave: n with probability a, else 0.
[[nodiscard]] std::uint64_t transmit_event(TransmissionModel model,
                                           std::uint64_t n, Transmittance a,
                                           Rng& rng);

/// Single-pass transmission of n_trials thermal states. Output depends only
/// on the arguments, never on `threads` (0 picks the hardware count).
[[nodiscard]] SampleStats run_transmission_experiment(
    TransmissionModel model, MeanOccupancy mean_in, Transmittance a,
    std::uint64_t n_trials, RngSeed seed, unsigned threads = 0);

/// Escape record for one state released into the cavity.
struct CavityTrialRecord {
  std::uint64_t initial = 0;
  /// Photons escaping at bounce i, for i < bounces_used.
  std::vector<std::uint64_t> per_bounce_escapes;
  std::uint64_t total_escaped = 0;
  std::size_t bounces_used = 0;
  /// Photons still inside when the cutoff was reached.
  std::uint64_t still_circulating = 0;
};

/// Reflection cutoff used when none is given: smallest i >= 1 with
/// (1 - a)^i < 1e-9.
[[nodiscard]] std::size_t default_trial_cutoff(Transmittance a);

/// Releases n photons into the cavity and follows them for at most
/// `cutoff` meetings with the surface. Independent: at each meeting every
/// photon still inside escapes with probability a. Wave: the whole state
/// escapes at the first success of a Bernoulli(a) sequence.
[[nodiscard]] CavityTrialRecord simulate_cavity_trial(TransmissionModel model,
                                                      std::uint64_t n,
                                                      Transmittance a,
                                                      std::size_t cutoff,
                                                      Rng& rng);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct CavityExperimentResult {
  std::size_t cutoff = 0;
  /// Escape counts at bounce i, over all trials.
  std::vector<SampleStats> per_bounce;
  /// Total escaped count per trial.
  SampleStats total_escaped;
  /// Independent: per-trial sum_i k_i^2 averaged, i.e. sum over bounces of
  /// the per-bounce sample second moments. Wave: sample second moment of
  /// the total escaped count.
  Estimate aggregate_second_moment;
  /// Trials with photons left inside at the cutoff, and those photons.
  std::uint64_t residual_trials = 0;
  std::uint64_t residual_photons = 0;
};

/// Throws DomainError when a = 0 or cutoff < 1.
[[nodiscard]] CavityExperimentResult run_cavity_experiment(
    TransmissionModel model, MeanOccupancy mean_in, Transmittance a,
    std::uint64_t n_trials, std::size_t cutoff, RngSeed seed,
    unsigned threads = 0);

}  // namespace photostat
