// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace photostat {

inline constexpr double kDefaultTailTolerance = 1e-14;
/// Allowed deviation of (sum(probs) + tail_mass) from one.
inline constexpr double kNormalizationSlack = 1e-12;
/// Longest support a constructed PMF may have.
inline constexpr std::size_t kMaxSupport = std::size_t{1} << 24;

/// Mean number of quanta per phase-space cell. Nonnegative and finite.
class MeanOccupancy {
 public:
  explicit MeanOccupancy(double value);

  [[nodiscard]] double value() const { return value_; }

 private:
  double value_;
};

/// Photon-number probability mass function stored on n = 0..n_max, with
/// the probability beyond n_max kept as an explicit tail mass.
///
/// Instances are immutable; copies share the probability storage.
///
/// When the tail is known to continue geometrically (Bose-Einstein inputs
/// and anything derived from them by uniform rescaling of n >= 1), the mean
/// of that geometric law is recorded so moments can add the exact tail sums.
class PhotonNumberPMF {
 public:
  /// Validates nonnegativity, normalization within kNormalizationSlack and
  /// tail_mass <= tail_tolerance. Throws DomainError otherwise.
  PhotonNumberPMF(std::vector<double> probs, double tail_mass,
                  double tail_tolerance = kDefaultTailTolerance,
                  std::optional<double> geometric_tail_mean = std::nullopt);

  /// All mass at n = 0.
  static PhotonNumberPMF vacuum(double tail_tolerance = kDefaultTailTolerance);

  [[nodiscard]] std::span<const double> probs() const { return *probs_; }
  /// Probability of n, zero outside the stored support.
  [[nodiscard]] double operator[](std::size_t n) const {
    return n < probs_->size() ? (*probs_)[n] : 0.0;
  }
  [[nodiscard]] std::size_t size() const { return probs_->size(); }
  [[nodiscard]] std::size_t n_max() const { return probs_->size() - 1; }
  [[nodiscard]] double tail_mass() const { return tail_mass_; }
  [[nodiscard]] double tail_tolerance() const { return tail_tolerance_; }
  [[nodiscard]] std::optional<double> geometric_tail_mean() const {
    return geometric_tail_mean_;
  }
  /// sum(probs) + tail_mass, compensated.
  [[nodiscard]] double total_mass() const;

 private:
  std::shared_ptr<const std::vector<double>> probs_;
  double tail_mass_;
  double tail_tolerance_;
  std::optional<double> geometric_tail_mean_;
};

struct MomentReport {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  /// variance / mean; empty when mean == 0.
  std::optional<double> fano_factor;
  /// True when the tail contribution was added in closed form.
  bool tail_exact = false;
  /// Without a known tail shape the dropped mass contributes at least
  /// (n_max + 1) * tail_mass to the mean and (n_max + 1)^2 * tail_mass to the
  /// second moment; these are reported here and not added. Zero when
  /// tail_exact.
  double mean_tail_bound = 0.0;
  double second_moment_tail_bound = 0.0;
};

/// P(n) = m^n / (1 + m)^(n+1), truncated at the first n_max whose remaining
/// geometric tail (m / (1 + m))^(n_max + 1) falls below tail_tol.
///
/// Requires 0 < tail_tol < 1. m = 0 yields the vacuum.
[[nodiscard]] PhotonNumberPMF bose_einstein_pmf(
    MeanOccupancy mean, double tail_tol = kDefaultTailTolerance);

[[nodiscard]] MomentReport pmf_moments(const PhotonNumberPMF& p);

/// <n^2> = <n> + 2 <n>^2 for thermal light.
[[nodiscard]] double einstein_second_moment(MeanOccupancy mean);

}  // namespace photostat
