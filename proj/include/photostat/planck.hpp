// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "photostat/distributions.hpp"
#include "photostat/transmission.hpp"

namespace photostat {

/// Dimensionless photon energy x = hbar omega / (k T). Positive and finite.
class ReducedFrequency {
 public:
  explicit ReducedFrequency(double x);

  [[nodiscard]] double value() const { return x_; }

 private:
  double x_;
};

/// SI constants used by the dimensional wrappers.
struct PhysicalConstants {
  double hbar;  // J s
  double c;     // m / s
  double k;     // J / K

  /// CODATA 2018 recommended values. c and k are exact in the 2019 SI;
  /// hbar = h / (2 pi) with h exact, rounded to 10 significant digits as
  /// published.
  static constexpr PhysicalConstants codata2018() {
    return {1.054571817e-34, 299792458.0, 1.380649e-23};
  }

  /// Throws DomainError unless every constant is positive and finite.
  void validate() const;
};

/// <n> = 1 / (e^x - 1), evaluated with expm1 so small x keeps full precision.
[[nodiscard]] MeanOccupancy mean_occupancy(ReducedFrequency x);

/// hbar omega / (k T); throws DomainError for nonpositive omega or T.
[[nodiscard]] ReducedFrequency reduced_frequency(
    double omega, double temperature,
    const PhysicalConstants& consts = PhysicalConstants::codata2018());

/// omega^2 / (pi^2 c^3): phase-space cells per unit volume and unit omega.
[[nodiscard]] double mode_density(
    double omega,
    const PhysicalConstants& consts = PhysicalConstants::codata2018());

/// Blackbody spectral energy density per unit angular frequency,
/// hbar omega^3 / (pi^2 c^3) / (e^x - 1), in J s / m^3.
[[nodiscard]] double spectral_density(
    double omega, double temperature,
    const PhysicalConstants& consts = PhysicalConstants::codata2018());

/// <n> hbar omega * mode_density(omega): the same density assembled from an
/// occupancy, so an attenuated occupancy gives the graybody value.
[[nodiscard]] double density_from_occupancy(
    MeanOccupancy occupancy, double omega,
    const PhysicalConstants& consts = PhysicalConstants::codata2018());

/// a * spectral_density(omega, T).
[[nodiscard]] double graybody_density(
    double omega, double temperature, Transmittance a,
    const PhysicalConstants& consts = PhysicalConstants::codata2018());

/// x^3 / (e^x - 1): the spectral density in units of
/// (k T)^3 / (pi^2 c^3 hbar^2) per unit x.
[[nodiscard]] double reduced_spectral_density(ReducedFrequency x);

}  // namespace photostat
