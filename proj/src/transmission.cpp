// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include "photostat/transmission.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "photostat/error.hpp"
#include "photostat/summation.hpp"

namespace photostat {

Transmittance::Transmittance(double a) : a_(a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    std::ostringstream msg;
    msg << "transmittance must lie in [0, 1], got " << a;
    throw DomainError(msg.str());
  }
}

std::string_view to_string(TransmissionModel model) {
  switch (model) {
    case TransmissionModel::Independent:
      return "independent";
    case TransmissionModel::Wave:
      return "wave";
  }
  return "unknown";
}

TransmissionModel parse_transmission_model(std::string_view name) {
  if (name == "independent") {
    return TransmissionModel::Independent;
  }
  if (name == "wave") {
    return TransmissionModel::Wave;
  }
  throw DomainError("unknown transmission model '" + std::string(name) +
                    "' (expected independent or wave)");
}

std::vector<double> binomial_pmf(std::size_t n, double a) {
  std::vector<double> row(n + 1, 0.0);
  if (a <= 0.0) {
    row.front() = 1.0;
    return row;
  }
  if (a >= 1.0) {
    row.back() = 1.0;
    return row;
  }

  const double dn = static_cast<double>(n);
  const auto mode = std::min(n, static_cast<std::size_t>((dn + 1.0) * a));
  const double dm = static_cast<double>(mode);
  const double log_peak = std::lgamma(dn + 1.0) - std::lgamma(dm + 1.0) -
                          std::lgamma(dn - dm + 1.0) + dm * std::log(a) +
                          (dn - dm) * std::log1p(-a);
  const double odds = a / (1.0 - a);

  row[mode] = std::exp(log_peak);
  for (std::size_t k = mode; k < n && row[k] > 0.0; ++k) {
    row[k + 1] = row[k] * (static_cast<double>(n - k) /
                           static_cast<double>(k + 1)) * odds;
  }
  for (std::size_t k = mode; k > 0 && row[k] > 0.0; --k) {
    row[k - 1] = row[k] * (static_cast<double>(k) /
                           static_cast<double>(n - k + 1)) / odds;
  }

  CompensatedSum total;
  for (double v : row) {
    total += v;
  }
  const double scale = 1.0 / total.value();
  for (double& v : row) {
    v *= scale;
  }
  return row;
}

PhotonNumberPMF independent_transmit_closed_form(MeanOccupancy mean_in,
                                                 Transmittance a,
                                                 double tail_tol) {
  return bose_einstein_pmf(MeanOccupancy(a.value() * mean_in.value()),
                           tail_tol);
}

PhotonNumberPMF binomial_thinning(const PhotonNumberPMF& p, Transmittance a) {
  if (a.value() == 1.0) {
    return p;
  }
  const auto in = p.probs();
  std::vector<double> out(in.size(), 0.0);
  for (std::size_t n = 0; n < in.size(); ++n) {
    if (in[n] == 0.0) {
      continue;
    }
    const auto row = binomial_pmf(n, a.value());
    for (std::size_t k = 0; k <= n; ++k) {
      out[k] += in[n] * row[k];
    }
  }
  return PhotonNumberPMF(std::move(out), p.tail_mass(), p.tail_tolerance());
}

PhotonNumberPMF wave_transmit(const PhotonNumberPMF& p, Transmittance a) {
  const double t = a.value();
  if (t == 1.0) {
    return p;
  }
  const auto in = p.probs();
  std::vector<double> out(in.size());
  out[0] = 1.0 - t * (1.0 - in[0]);
  for (std::size_t n = 1; n < in.size(); ++n) {
    out[n] = t * in[n];
  }
  return PhotonNumberPMF(std::move(out), t * p.tail_mass(), p.tail_tolerance(),
                         p.geometric_tail_mean());
}

double kirchhoff_mean_check(const PhotonNumberPMF& p_in,
                            const PhotonNumberPMF& p_out, Transmittance a) {
  return std::fabs(pmf_moments(p_out).mean - a.value() * pmf_moments(p_in).mean);
}

}  // namespace photostat
