// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "photostat/distributions.hpp"
#include "photostat/transmission.hpp"

namespace photostat {

// Body-mirror cavity. A state inside the gap meets the body surface
// repeatedly; at each meeting it escapes with weight a and is otherwise
// reflected back, so the state leaving after i reflections carries weight
// a (1 - a)^i. All operations here reject a = 0: nothing ever escapes.

/// Stopping rule target for the un-escaped remainder (1 - a)^(i_max + 1).
inline constexpr double kBounceResidualTarget = 1e-12;
inline constexpr std::size_t kMaxBounceOrder = 1'000'000;

/// Smallest i_max with (1 - a)^(i_max + 1) < kBounceResidualTarget, capped at
/// kMaxBounceOrder.
[[nodiscard]] std::size_t default_bounce_limit(Transmittance a);

/// a * sum_{i=0}^{i_max} (1 - a)^i, the emitted energy in units of the
/// blackbody value. Tends to 1 as i_max grows.
[[nodiscard]] double cavity_energy_series(Transmittance a, std::size_t i_max);

/// Per-reflection-order photon-number distributions Q^i and their escape
/// weights. per_bounce entries are stored unweighted.
struct BounceSeries {
  TransmissionModel model;
  double mean_in;
  double transmittance;
  std::vector<double> weights;               // a (1 - a)^i
  std::vector<PhotonNumberPMF> per_bounce;   // Q^i
  double residual_weight;                    // (1 - a)^(i_max + 1)

  [[nodiscard]] std::size_t i_max() const { return weights.size() - 1; }
};

/// Independent: Q^i = Bose-Einstein with mean a (1 - a)^i mean_in.
/// Wave: Q^i = Bose-Einstein(mean_in) for every i.
[[nodiscard]] BounceSeries build_bounce_series(
    TransmissionModel model, MeanOccupancy mean_in, Transmittance a,
    std::optional<std::size_t> i_max = std::nullopt,
    double tail_tol = kDefaultTailTolerance);

/// max_n |sum_i weights[i] Q^i[n] - p[n]| for a wave series. The residual
/// weight is not added back, so the result is bounded by
/// residual_weight * max_n p[n] plus rounding.
///
/// Throws DomainError for an independent series, whose unweighted Q^i do
/// not sum to a distribution (see bounce_sum).
[[nodiscard]] double wave_decomposition_check(const BounceSeries& series,
                                              const PhotonNumberPMF& p);

/// sum_i Q^i[n], the literal unweighted bounce-order sum. For the
/// independent model at n = 0 this grows without bound with i_max.
[[nodiscard]] double bounce_sum(const BounceSeries& series, std::size_t n);

struct CavityMomentReport {
  double second_moment_series = 0.0;
  double second_moment_closed = 0.0;
  std::size_t i_max_used = 0;
  /// Upper bound on what the series drops beyond i_max.
  double truncation_residual = 0.0;
};

/// m + 2 a m^2 / (2 - a).
[[nodiscard]] double independent_cavity_closed_form(MeanOccupancy mean_in,
                                                    Transmittance a);
/// m + 2 m^2, whatever the transmittance.
[[nodiscard]] double wave_cavity_closed_form(MeanOccupancy mean_in,
                                             Transmittance a);

/// Aggregate over reflection orders of the per-bounce second moments,
/// sum_i <n^2>_{Q^i} with Q^i Bose-Einstein of mean a (1 - a)^i m. This is
/// not the second moment of one normalized distribution.
///
/// The series and closed form are cross-checked; a mismatch beyond the
/// truncation bound throws std::logic_error.
[[nodiscard]] CavityMomentReport independent_cavity_second_moment(
    MeanOccupancy mean_in, Transmittance a,
    std::optional<std::size_t> i_max = std::nullopt);

/// sum_i a (1 - a)^i <n^2>_{P}, cross-checked against m + 2 m^2.
[[nodiscard]] CavityMomentReport wave_cavity_second_moment(
    MeanOccupancy mean_in, Transmittance a,
    std::optional<std::size_t> i_max = std::nullopt);

}  // namespace photostat
