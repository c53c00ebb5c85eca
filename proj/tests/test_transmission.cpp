// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "photostat/error.hpp"
#include "photostat/summation.hpp"
#include "photostat/transmission.hpp"

using namespace photostat;

namespace {

// C(n, k) a^k (1-a)^(n-k) by direct products in long double.
long double naive_binomial(unsigned n, unsigned k, long double a) {
  long double c = 1;
  for (unsigned j = 1; j <= k; ++j) {
    c = c * (n - k + j) / j;
  }
  return c * std::pow(a, static_cast<long double>(k)) *
         std::pow(1 - a, static_cast<long double>(n - k));
}

double max_pointwise_gap(const PhotonNumberPMF& x, const PhotonNumberPMF& y) {
  const std::size_t n = std::max(x.size(), y.size());
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::fabs(x[i] - y[i]));
  }
  return worst;
}

const double kGridA[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

}  // namespace

TEST_CASE("Transmittance domain") {
  CHECK_THROWS_AS(Transmittance(-0.01), DomainError);
  CHECK_THROWS_AS(Transmittance(1.0000001), DomainError);
  CHECK_THROWS_AS(Transmittance(std::nan("")), DomainError);
  CHECK(Transmittance(0.0).value() == 0.0);
  CHECK(Transmittance(1.0).value() == 1.0);
}

TEST_CASE("model names round-trip") {
  for (auto m : {TransmissionModel::Independent, TransmissionModel::Wave}) {
    CHECK(parse_transmission_model(to_string(m)) == m);
  }
  CHECK_THROWS_AS((void)parse_transmission_model("particle"), DomainError);
}

TEST_CASE("binomial_pmf matches direct products for small n") {
  for (unsigned n : {0u, 1u, 2u, 7u, 30u, 60u}) {
    for (double a : {0.0, 0.05, 0.3, 0.5, 0.77, 1.0}) {
      const auto row = binomial_pmf(n, a);
      REQUIRE(row.size() == n + 1);
      for (unsigned k = 0; k <= n; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(a);
        CHECK(std::fabs(row[k] - static_cast<double>(naive_binomial(n, k, a))) < 1e-15);
      }
    }
  }
}

TEST_CASE("binomial_pmf stays finite and normalized for long rows") {
  for (std::size_t n : {2000u, 10000u}) {
    for (double a : {0.001, 0.5, 0.999}) {
      const auto row = binomial_pmf(n, a);
      CompensatedSum total;
      CompensatedSum mean;
      for (std::size_t k = 0; k <= n; ++k) {
        REQUIRE(std::isfinite(row[k]));
        total += row[k];
        mean += static_cast<double>(k) * row[k];
      }
      CHECK(total.value() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(mean.value() == doctest::Approx(static_cast<double>(n) * a).epsilon(1e-12));
    }
  }
}

TEST_CASE("independent_transmit_closed_form worked values") {
  const MeanOccupancy one(1.0);
  CHECK(independent_transmit_closed_form(one, Transmittance(1.0))[0] == doctest::Approx(0.5));
  CHECK(independent_transmit_closed_form(one, Transmittance(0.5))[0] ==
        doctest::Approx(1.0 / 1.5).epsilon(1e-15));
  const auto dark = independent_transmit_closed_form(MeanOccupancy(2.0), Transmittance(0.0));
  CHECK(dark.size() == 1);
  CHECK(dark[0] == 1.0);
}

TEST_CASE("binomial_thinning edge cases") {
  const auto p = bose_einstein_pmf(MeanOccupancy(3.0));
  SUBCASE("a = 1 is the identity") {
    const auto out = binomial_thinning(p, Transmittance(1.0));
    CHECK(max_pointwise_gap(out, p) <= 1e-15);
  }
  SUBCASE("a = 0 collapses to the vacuum, keeping the tail") {
    const auto out = binomial_thinning(p, Transmittance(0.0));
    CHECK(out[0] == doctest::Approx(1.0 - p.tail_mass()).epsilon(1e-15));
    for (std::size_t n = 1; n < out.size(); ++n) {
      CHECK(out[n] == 0.0);
    }
    CHECK(out.tail_mass() == p.tail_mass());
  }
  SUBCASE("Bose-Einstein(1) thinned by one half is Bose-Einstein(0.5)") {
    const auto out = binomial_thinning(bose_einstein_pmf(MeanOccupancy(1.0)), Transmittance(0.5));
    CHECK(max_pointwise_gap(out, bose_einstein_pmf(MeanOccupancy(0.5))) <= 1e-10);
  }
  SUBCASE("generic input with tail mass") {
    const PhotonNumberPMF q({0.2, 0.3, 0.5 - 1e-15}, 1e-15);
    const auto out = binomial_thinning(q, Transmittance(0.25));
    CHECK(out.tail_mass() == 1e-15);
    CHECK(std::fabs(out.total_mass() - 1.0) <= 1e-12);
    CHECK(out[2] == doctest::Approx(q[2] * 0.0625));
  }
}

TEST_CASE("wave_transmit worked values") {
  const auto p = bose_einstein_pmf(MeanOccupancy(1.0));
  const auto out = wave_transmit(p, Transmittance(0.5));
  CHECK(out[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(out[1] == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(out[2] == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(out.tail_mass() == doctest::Approx(0.5 * p.tail_mass()));

  CHECK(max_pointwise_gap(wave_transmit(p, Transmittance(1.0)), p) == 0.0);
  const auto dark = wave_transmit(p, Transmittance(0.0));
  CHECK(dark[0] == 1.0);
  CHECK(dark.tail_mass() == 0.0);
  for (std::size_t n = 1; n < dark.size(); ++n) {
    CHECK(dark[n] == 0.0);
  }
}

TEST_CASE("kirchhoff_mean_check worked values") {
  const auto p_in = bose_einstein_pmf(MeanOccupancy(1.0));
  CHECK(kirchhoff_mean_check(p_in, wave_transmit(p_in, Transmittance(0.5)), Transmittance(0.5)) <
        1e-10);
  CHECK(kirchhoff_mean_check(p_in,
                             independent_transmit_closed_form(MeanOccupancy(1.0), Transmittance(0.5)),
                             Transmittance(0.5)) < 1e-10);
  CHECK(kirchhoff_mean_check(p_in, PhotonNumberPMF::vacuum(), Transmittance(0.0)) == 0.0);
}

TEST_CASE("property: both transforms preserve normalization and scale the mean") {
  for (double m : {0.1, 1.0, 10.0}) {
    const MeanOccupancy mean(m);
    const auto p = bose_einstein_pmf(mean);
    for (double av : kGridA) {
      CAPTURE(m);
      CAPTURE(av);
      const Transmittance a(av);
      const auto wave = wave_transmit(p, a);
      const auto thinned = binomial_thinning(p, a);
      const auto closed = independent_transmit_closed_form(mean, a);
      for (const auto* out : {&wave, &thinned, &closed}) {
        CHECK(std::fabs(out->total_mass() - 1.0) <= 1e-12);
        CHECK(kirchhoff_mean_check(p, *out, a) <= 1e-10);
      }
      CHECK(std::fabs((1.0 - wave[0]) - av * (1.0 - p[0])) <= 1e-15);
    }
  }
}

TEST_CASE("property: thinning reproduces the closed form (family closure)") {
  for (double m : {0.5, 1.0, 5.0, 20.0}) {
    for (double av : kGridA) {
      CAPTURE(m);
      CAPTURE(av);
      const auto thinned = binomial_thinning(bose_einstein_pmf(MeanOccupancy(m)), Transmittance(av));
      const auto closed = independent_transmit_closed_form(MeanOccupancy(m), Transmittance(av));
      CHECK(max_pointwise_gap(thinned, closed) <= 1e-10);
    }
  }
}

TEST_CASE("property: second moments separate the two hypotheses") {
  for (double m : {0.1, 1.0, 10.0}) {
    const auto p = bose_einstein_pmf(MeanOccupancy(m));
    for (double av : kGridA) {
      CAPTURE(m);
      CAPTURE(av);
      const double wave = pmf_moments(wave_transmit(p, Transmittance(av))).second_moment;
      const double indep =
          pmf_moments(independent_transmit_closed_form(MeanOccupancy(m), Transmittance(av)))
              .second_moment;
      CHECK(wave == doctest::Approx(av * (m + 2 * m * m)).epsilon(1e-12));
      CHECK(indep == doctest::Approx(av * m + 2 * av * av * m * m).epsilon(1e-12));
      if (av == 0.0 || av == 1.0) {
        CHECK(std::fabs(wave - indep) <= 1e-10);
      } else {
        CHECK(wave - indep > 1e-10);
      }
    }
  }
}
