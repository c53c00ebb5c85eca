// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

#include "photostat/distributions.hpp"

namespace photostat {

/// Energy transmission coefficient of a surface, 0 <= a <= 1.
class Transmittance {
 public:
  explicit Transmittance(double a);

  [[nodiscard]] double value() const { return a_; }

 private:
  double a_;
};

/// The two boundary-crossing hypotheses.
///  - Independent: every photon crosses on its own with probability a.
///  - Wave: the n-photon state crosses whole with probability a, or is
///    reflected whole; it is never split.
enum class TransmissionModel { Independent, Wave };

[[nodiscard]] std::string_view to_string(TransmissionModel model);
/// Accepts "independent" or "wave"; throws DomainError otherwise.
[[nodiscard]] TransmissionModel parse_transmission_model(std::string_view name);

/// Binomial(n, a) probabilities for k = 0..n.
///
/// Evaluated from the mode outward with ratio recurrences, seeded in log
/// space and renormalized, so it neither overflows nor underflows for large n.
[[nodiscard]] std::vector<double> binomial_pmf(std::size_t n, double a);

/// Independent transmission of Bose-Einstein light: Bose-Einstein with mean
/// a * mean_in.
[[nodiscard]] PhotonNumberPMF independent_transmit_closed_form(
    MeanOccupancy mean_in, Transmittance a,
    double tail_tol = kDefaultTailTolerance);

/// out[k] = sum_{n >= k} p[n] C(n, k) a^k (1 - a)^(n - k) over the stored
/// support. The input tail mass is carried over unchanged, so the output is
/// normalized but its tail shape is no longer known.
[[nodiscard]] PhotonNumberPMF binomial_thinning(const PhotonNumberPMF& p,
                                                Transmittance a);

/// out[n] = a p[n] for n >= 1, out[0] = 1 - a (1 - p[0]), tail = a * tail.
[[nodiscard]] PhotonNumberPMF wave_transmit(const PhotonNumberPMF& p,
                                            Transmittance a);

/// |mean(p_out) - a mean(p_in)|.
[[nodiscard]] double kirchhoff_mean_check(const PhotonNumberPMF& p_in,
                                          const PhotonNumberPMF& p_out,
                                          Transmittance a);

}  // namespace photostat
