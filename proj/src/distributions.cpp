// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include "photostat/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "photostat/error.hpp"
#include "photostat/summation.hpp"

namespace photostat {

MeanOccupancy::MeanOccupancy(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("mean occupancy must be finite");
  }
  if (value < 0.0) {
    std::ostringstream msg;
    msg << "mean occupancy must be nonnegative, got " << value;
    throw DomainError(msg.str());
  }
}

PhotonNumberPMF::PhotonNumberPMF(std::vector<double> probs, double tail_mass,
                                 double tail_tolerance,
                                 std::optional<double> geometric_tail_mean)
    : tail_mass_(tail_mass),
      tail_tolerance_(tail_tolerance),
      geometric_tail_mean_(geometric_tail_mean) {
  if (probs.empty()) {
    throw DomainError("PMF support must contain at least n = 0");
  }
  if (probs.size() > kMaxSupport) {
    throw DomainError("PMF support exceeds the supported length");
  }
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw DomainError("PMF entries must be finite and nonnegative");
    }
  }
  if (!(tail_mass >= 0.0) || !std::isfinite(tail_mass)) {
    throw DomainError("tail mass must be finite and nonnegative");
  }
  if (tail_mass > tail_tolerance) {
    throw DomainError("tail mass exceeds the requested tail tolerance");
  }
  if (geometric_tail_mean && !(*geometric_tail_mean >= 0.0)) {
    throw DomainError("geometric tail mean must be nonnegative");
  }
  probs_ = std::make_shared<const std::vector<double>>(std::move(probs));
  if (std::fabs(total_mass() - 1.0) > kNormalizationSlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "PMF is not normalized: total mass " << total_mass();
    throw DomainError(msg.str());
  }
}

PhotonNumberPMF PhotonNumberPMF::vacuum(double tail_tolerance) {
  return PhotonNumberPMF({1.0}, 0.0, tail_tolerance, 0.0);
}

double PhotonNumberPMF::total_mass() const {
  CompensatedSum sum;
  for (double p : *probs_) {
    sum += p;
  }
  sum += tail_mass_;
  return sum.value();
}

PhotonNumberPMF bose_einstein_pmf(MeanOccupancy mean, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw DomainError("tail tolerance must lie in (0, 1)");
  }
  const double m = mean.value();
  if (m == 0.0) {
    return PhotonNumberPMF::vacuum(tail_tol);
  }

  // q = m / (1 + m); log q = -log1p(1/m) keeps precision for large m.
  const double log_q = -std::log1p(1.0 / m);
  auto tail_after = [log_q](double n) { return std::exp((n + 1.0) * log_q); };

  double n_max = std::max(0.0, std::ceil(std::log(tail_tol) / log_q) - 1.0);
  while (tail_after(n_max) >= tail_tol) {
    n_max += 1.0;
  }
  while (n_max > 0.0 && tail_after(n_max - 1.0) < tail_tol) {
    n_max -= 1.0;
  }
  if (n_max + 1.0 > static_cast<double>(kMaxSupport)) {
    throw DomainError("mean occupancy too large for the requested tail tolerance");
  }

  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<double> probs(size);
  const double ground = 1.0 / (1.0 + m);
  for (std::size_t n = 0; n < size; ++n) {
    probs[n] = ground * std::exp(static_cast<double>(n) * log_q);
  }
  return PhotonNumberPMF(std::move(probs), tail_after(n_max), tail_tol, m);
}

MomentReport pmf_moments(const PhotonNumberPMF& p) {
  CompensatedSum first;
  CompensatedSum second;
  const auto probs = p.probs();
  for (std::size_t n = 0; n < probs.size(); ++n) {
    const double dn = static_cast<double>(n);
    first += dn * probs[n];
    second += dn * dn * probs[n];
  }

  MomentReport report;
  const double k = static_cast<double>(probs.size());  // first dropped index
  const double tail = p.tail_mass();
  if (const auto tail_mean = p.geometric_tail_mean()) {
    // For P(n) proportional to q^n on n >= k with total mass T and
    // m = q / (1 - q):  sum n P = T (k + m),
    //                   sum n^2 P = T (k^2 + (2k + 1) m + 2 m^2).
    const double m = *tail_mean;
    first += tail * (k + m);
    second += tail * (k * k + (2.0 * k + 1.0) * m + 2.0 * m * m);
    report.tail_exact = true;
  } else {
    report.mean_tail_bound = tail * k;
    report.second_moment_tail_bound = tail * k * k;
  }

  report.mean = first.value();
  report.second_moment = second.value();
  report.variance = report.second_moment - report.mean * report.mean;
  if (report.mean > 0.0) {
    report.fano_factor = report.variance / report.mean;
  }
  return report;
}

double einstein_second_moment(MeanOccupancy mean) {
  const double m = mean.value();
  return m + 2.0 * m * m;
}

}  // namespace photostat
