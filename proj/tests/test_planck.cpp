// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "photostat/error.hpp"
#include "photostat/planck.hpp"

using namespace photostat;

// Reference values below were evaluated at 50 significant digits with
// mpmath from 1 / (exp(x) - 1) and hbar w^3 / (pi^2 c^3) / (exp(hbar w / kT) - 1)
// using the CODATA 2018 constants.

TEST_CASE("mean_occupancy worked values") {
  CHECK(std::fabs(mean_occupancy(ReducedFrequency(std::numbers::ln2)).value() - 1.0) <= 1e-15);
  CHECK(mean_occupancy(ReducedFrequency(0.693147180559945)).value() ==
        doctest::Approx(1.0000000000000006188).epsilon(1e-15));

  const double wien = mean_occupancy(ReducedFrequency(50.0)).value();
  const double asymptote = std::exp(-50.0) / (1.0 - std::exp(-50.0));
  CHECK(std::fabs(wien - asymptote) / asymptote < 1e-12);
  CHECK(wien == doctest::Approx(1.928749847963917783e-22).epsilon(1e-14));

  CHECK(mean_occupancy(ReducedFrequency(0.001)).value() ==
        doctest::Approx(999.50008333333194444).epsilon(1e-15));
  CHECK(mean_occupancy(ReducedFrequency(1e-6)).value() ==
        doctest::Approx(999999.50000008333333).epsilon(1e-15));
  CHECK(mean_occupancy(ReducedFrequency(5.0)).value() ==
        doctest::Approx(0.006783654906304231096).epsilon(1e-15));
}

TEST_CASE("ReducedFrequency domain") {
  CHECK_THROWS_AS(ReducedFrequency(0.0), DomainError);
  CHECK_THROWS_AS(ReducedFrequency(-1.0), DomainError);
  CHECK_THROWS_AS(ReducedFrequency(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("spectral_density pinned values") {
  CHECK(spectral_density(1e14, 300.0) ==
        doctest::Approx(3.373020809810809968e-20).epsilon(1e-13));
  CHECK(spectral_density(2e13, 5000.0) ==
        doctest::Approx(1.022586483324164563e-19).epsilon(1e-13));
}

TEST_CASE("spectral_density factorizes into occupancy, quantum and mode density") {
  for (double omega : {1e10, 3e12, 1e14, 5e15}) {
    for (double t : {3.0, 300.0, 6000.0}) {
      const auto x = reduced_frequency(omega, t);
      const double direct = spectral_density(omega, t);
      const double factored = density_from_occupancy(mean_occupancy(x), omega);
      CAPTURE(omega);
      CAPTURE(t);
      if (direct == 0.0) {
        CHECK(factored == 0.0);
      } else {
        CHECK(std::fabs(direct - factored) / direct <= 1e-14);
      }
    }
  }
}

TEST_CASE("spectral_density vanishes as T goes to zero") {
  double previous = spectral_density(1e14, 300.0);
  for (double t : {100.0, 30.0, 10.0, 3.0, 1.0}) {
    const double v = spectral_density(1e14, t);
    CHECK(v < previous);
    previous = v;
  }
  CHECK(spectral_density(1e14, 1.0) == 0.0);
}

TEST_CASE("dimensional wrappers reject nonpositive input") {
  CHECK_THROWS_AS((void)spectral_density(0.0, 300.0), DomainError);
  CHECK_THROWS_AS((void)spectral_density(1e14, -1.0), DomainError);
  CHECK_THROWS_AS((void)graybody_density(1e14, 0.0, Transmittance(0.5)), DomainError);
  PhysicalConstants bad = PhysicalConstants::codata2018();
  bad.c = 0.0;
  CHECK_THROWS_AS((void)spectral_density(1e14, 300.0, bad), DomainError);
}

TEST_CASE("graybody_density scales the blackbody value") {
  const double black = spectral_density(1e14, 300.0);
  CHECK(graybody_density(1e14, 300.0, Transmittance(1.0)) == black);
  CHECK(graybody_density(1e14, 300.0, Transmittance(0.0)) == 0.0);
  CHECK(std::fabs(graybody_density(1e14, 300.0, Transmittance(0.5)) - 0.5 * black) <=
        1e-15 * black);
}

TEST_CASE("property: occupancy is strictly decreasing") {
  double previous = INFINITY;
  for (double x = 1e-8; x < 700.0; x *= 1.3) {
    const double n = mean_occupancy(ReducedFrequency(x)).value();
    CHECK(n < previous);
    previous = n;
  }
}

TEST_CASE("property: Kirchhoff chain, attenuated occupancy equals graybody density") {
  for (double a : {0.0, 0.1, 0.25, 0.5, 0.8, 1.0}) {
    for (double omega : {1e12, 1e14}) {
      const double t = 500.0;
      const auto x = reduced_frequency(omega, t);
      const MeanOccupancy attenuated(a * mean_occupancy(x).value());
      const double via_occupancy = density_from_occupancy(attenuated, omega);
      const double via_graybody = graybody_density(omega, t, Transmittance(a));
      CAPTURE(a);
      CAPTURE(omega);
      CHECK(std::fabs(via_occupancy - via_graybody) <= 1e-15 * std::max(via_graybody, 1e-300) +
                                                           1e-15 * spectral_density(omega, t));
    }
  }
}

TEST_CASE("property: Bose-Einstein built from a Planck occupancy keeps its mean") {
  for (double x : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0}) {
    const auto occ = mean_occupancy(ReducedFrequency(x));
    CHECK(std::fabs(pmf_moments(bose_einstein_pmf(occ)).mean - occ.value()) <= 1e-9);
  }
}
