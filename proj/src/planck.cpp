// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include "photostat/planck.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "photostat/error.hpp"

namespace photostat {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << value;
    throw DomainError(msg.str());
  }
}

}  // namespace

ReducedFrequency::ReducedFrequency(double x) : x_(x) {
  require_positive(x, "reduced frequency hbar*omega/(k*T)");
}

void PhysicalConstants::validate() const {
  require_positive(hbar, "hbar");
  require_positive(c, "speed of light");
  require_positive(k, "Boltzmann constant");
}

MeanOccupancy mean_occupancy(ReducedFrequency x) {
  return MeanOccupancy(1.0 / std::expm1(x.value()));
}

ReducedFrequency reduced_frequency(double omega, double temperature,
                                   const PhysicalConstants& consts) {
  consts.validate();
  require_positive(omega, "angular frequency");
  require_positive(temperature, "temperature");
  return ReducedFrequency(consts.hbar * omega / (consts.k * temperature));
}

double mode_density(double omega, const PhysicalConstants& consts) {
  consts.validate();
  require_positive(omega, "angular frequency");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return omega * omega / (pi2 * consts.c * consts.c * consts.c);
}

double spectral_density(double omega, double temperature,
                        const PhysicalConstants& consts) {
  const auto x = reduced_frequency(omega, temperature, consts);
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double prefactor =
      consts.hbar * omega * omega * omega / (pi2 * consts.c * consts.c * consts.c);
  return prefactor * mean_occupancy(x).value();
}

double density_from_occupancy(MeanOccupancy occupancy, double omega,
                              const PhysicalConstants& consts) {
  return occupancy.value() * consts.hbar * omega * mode_density(omega, consts);
}

double graybody_density(double omega, double temperature, Transmittance a,
                        const PhysicalConstants& consts) {
  return a.value() * spectral_density(omega, temperature, consts);
}

double reduced_spectral_density(ReducedFrequency x) {
  const double v = x.value();
  return v * v * v * mean_occupancy(x).value();
}

}  // namespace photostat
