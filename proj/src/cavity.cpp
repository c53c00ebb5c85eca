// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include "photostat/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "photostat/error.hpp"
#include "photostat/summation.hpp"

namespace photostat {
namespace {

void require_escape(Transmittance a) {
  if (a.value() == 0.0) {
    throw DomainError(
        "cavity requires transmittance a > 0 (at a = 0 nothing escapes)");
  }
}

double reflect_power(double a, std::size_t i) {
  return std::pow(1.0 - a, static_cast<double>(i));
}

void cross_check(const CavityMomentReport& report, const char* what) {
  const double gap =
      std::fabs(report.second_moment_series - report.second_moment_closed);
  const double allowed = report.truncation_residual +
                         1e-9 * std::fabs(report.second_moment_closed) + 1e-15;
  if (!(gap <= allowed)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": series " << report.second_moment_series
        << " disagrees with closed form " << report.second_moment_closed;
    throw std::logic_error(msg.str());
  }
}

}  // namespace

std::size_t default_bounce_limit(Transmittance a) {
  require_escape(a);
  const double t = a.value();
  if (t == 1.0) {
    return 0;
  }
  const double log_r = std::log1p(-t);
  double guess = std::ceil(std::log(kBounceResidualTarget) / log_r) - 1.0;
  guess = std::clamp(guess, 0.0, static_cast<double>(kMaxBounceOrder));
  auto i = static_cast<std::size_t>(guess);
  while (i < kMaxBounceOrder && reflect_power(t, i + 1) >= kBounceResidualTarget) {
    ++i;
  }
  while (i > 0 && reflect_power(t, i) < kBounceResidualTarget) {
    --i;
  }
  return i;
}

double cavity_energy_series(Transmittance a, std::size_t i_max) {
  require_escape(a);
  CompensatedSum sum;
  for (std::size_t i = 0; i <= i_max; ++i) {
    sum += a.value() * reflect_power(a.value(), i);
  }
  return sum.value();
}

BounceSeries build_bounce_series(TransmissionModel model, MeanOccupancy mean_in,
                                 Transmittance a,
                                 std::optional<std::size_t> i_max,
                                 double tail_tol) {
  require_escape(a);
  const std::size_t last = i_max.value_or(default_bounce_limit(a));
  const double t = a.value();

  BounceSeries series{model, mean_in.value(), t, {}, {}, 0.0};
  series.weights.reserve(last + 1);
  series.per_bounce.reserve(last + 1);

  // Wave bounces all share one distribution (and its storage).
  const auto input = bose_einstein_pmf(mean_in, tail_tol);
  for (std::size_t i = 0; i <= last; ++i) {
    const double weight = t * reflect_power(t, i);
    series.weights.push_back(weight);
    if (model == TransmissionModel::Wave) {
      series.per_bounce.push_back(input);
    } else {
      series.per_bounce.push_back(
          bose_einstein_pmf(MeanOccupancy(weight * mean_in.value()), tail_tol));
    }
  }
  series.residual_weight = reflect_power(t, last + 1);
  return series;
}

double wave_decomposition_check(const BounceSeries& series,
                                const PhotonNumberPMF& p) {
  if (series.model != TransmissionModel::Wave) {
    throw DomainError(
        "bounce decomposition only reconstructs the input for the wave model; "
        "independent per-bounce distributions do not sum to a distribution");
  }
  std::size_t support = p.size();
  for (const auto& q : series.per_bounce) {
    support = std::max(support, q.size());
  }
  double worst = 0.0;
  for (std::size_t n = 0; n < support; ++n) {
    CompensatedSum recon;
    for (std::size_t i = 0; i < series.weights.size(); ++i) {
      recon += series.weights[i] * series.per_bounce[i][n];
    }
    worst = std::max(worst, std::fabs(recon.value() - p[n]));
  }
  return worst;
}

double bounce_sum(const BounceSeries& series, std::size_t n) {
  CompensatedSum sum;
  for (const auto& q : series.per_bounce) {
    sum += q[n];
  }
  return sum.value();
}

double independent_cavity_closed_form(MeanOccupancy mean_in, Transmittance a) {
  require_escape(a);
  const double m = mean_in.value();
  const double t = a.value();
  return m + 2.0 * t * m * m / (2.0 - t);
}

double wave_cavity_closed_form(MeanOccupancy mean_in, Transmittance a) {
  require_escape(a);
  return einstein_second_moment(mean_in);
}

CavityMomentReport independent_cavity_second_moment(
    MeanOccupancy mean_in, Transmittance a, std::optional<std::size_t> i_max) {
  const auto series =
      build_bounce_series(TransmissionModel::Independent, mean_in, a, i_max);
  CompensatedSum aggregate;
  for (const auto& q : series.per_bounce) {
    aggregate += pmf_moments(q).second_moment;
  }

  const double m = mean_in.value();
  const double t = a.value();
  const double r = series.residual_weight;
  // Dropped orders i > i_max: sum m_i = m r and
  // sum 2 m_i^2 = 2 a^2 m^2 r^2 / (1 - (1 - a)^2) = 2 a m^2 r^2 / (2 - a).
  CavityMomentReport report;
  report.second_moment_series = aggregate.value();
  report.second_moment_closed = independent_cavity_closed_form(mean_in, a);
  report.i_max_used = series.i_max();
  report.truncation_residual = m * r + 2.0 * t * m * m * r * r / (2.0 - t);
  cross_check(report, "independent cavity second moment");
  return report;
}

CavityMomentReport wave_cavity_second_moment(MeanOccupancy mean_in,
                                             Transmittance a,
                                             std::optional<std::size_t> i_max) {
  const auto series =
      build_bounce_series(TransmissionModel::Wave, mean_in, a, i_max);
  // Every wave bounce carries the same distribution.
  const double state_second_moment =
      pmf_moments(series.per_bounce.front()).second_moment;
  CompensatedSum aggregate;
  for (double weight : series.weights) {
    aggregate += weight * state_second_moment;
  }

  CavityMomentReport report;
  report.second_moment_series = aggregate.value();
  report.second_moment_closed = wave_cavity_closed_form(mean_in, a);
  report.i_max_used = series.i_max();
  report.truncation_residual =
      series.residual_weight * report.second_moment_closed;
  cross_check(report, "wave cavity second moment");
  return report;
}

}  // namespace photostat
