// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include "photostat/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "photostat/error.hpp"

namespace photostat {
namespace {

using u128 = uint128;

constexpr std::uint64_t kTrialBlock = 4096;

// Splits [0, n_trials) into fixed blocks handed round-robin to workers.
// Each worker owns one State; states are merged in worker order, which is
// harmless because State merging is exact integer addition.
template <class State, class Body>
State run_trials(std::uint64_t n_trials, unsigned threads, const State& prototype,
                 Body body) {
  const std::uint64_t blocks = (n_trials + kTrialBlock - 1) / kTrialBlock;
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(blocks, 1)));

  std::vector<State> states(workers, prototype);
  auto work = [&](unsigned w) {
    for (std::uint64_t b = w; b < blocks; b += workers) {
      const std::uint64_t end = std::min(n_trials, (b + 1) * kTrialBlock);
      for (std::uint64_t t = b * kTrialBlock; t < end; ++t) {
        body(states[w], t);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
  }
  State total = prototype;
  for (const auto& s : states) {
    total.merge(s);
  }
  return total;
}

void require_trials(std::uint64_t n_trials) {
  if (n_trials < 1) {
    throw DomainError("at least one trial is required");
  }
}

struct CavityState {
  std::vector<MomentAccumulator> per_bounce;
  MomentAccumulator total;
  MomentAccumulator aggregate;  // per-trial sum_i k_i^2 (independent model)
  std::uint64_t residual_trials = 0;
  std::uint64_t residual_photons = 0;

  void merge(const CavityState& other) {
    for (std::size_t i = 0; i < per_bounce.size(); ++i) {
      per_bounce[i].merge(other.per_bounce[i]);
    }
    total.merge(other.total);
    aggregate.merge(other.aggregate);
    residual_trials += other.residual_trials;
    residual_photons += other.residual_photons;
  }
};

// (N S_b - S_a^2) / (N (N - 1)), the unbiased variance, with the numerator
// formed exactly in 128-bit arithmetic.
double unbiased_variance(std::uint64_t n, u128 sum_a, u128 sum_b) {
  if (n < 2) {
    return 0.0;
  }
  const u128 lhs = static_cast<u128>(n) * sum_b;
  const u128 rhs = sum_a * sum_a;
  const long double numerator = static_cast<long double>(lhs - rhs);
  const long double nn = static_cast<long double>(n);
  return static_cast<double>(numerator / (nn * (nn - 1.0L)));
}

}  // namespace

void MomentAccumulator::add(std::uint64_t k) {
  const u128 kk = static_cast<u128>(k) * k;
  ++adds_;
  sum1_ += k;
  sum2_ += kk;
  sum4_ += kk * kk;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  adds_ += other.adds_;
  sum1_ += other.sum1_;
  sum2_ += other.sum2_;
  sum4_ += other.sum4_;
}

SampleStats MomentAccumulator::stats(std::uint64_t count) const {
  if (count < adds_ || count == 0) {
    throw std::logic_error("sample count smaller than number of recorded draws");
  }
  const long double n = static_cast<long double>(count);
  SampleStats s;
  s.count = count;
  s.mean = static_cast<double>(static_cast<long double>(sum1_) / n);
  s.second_moment = static_cast<double>(static_cast<long double>(sum2_) / n);
  s.variance = unbiased_variance(count, sum1_, sum2_);
  const double var_sq = unbiased_variance(count, sum2_, sum4_);
  s.stderr_mean = std::sqrt(s.variance / static_cast<double>(count));
  s.stderr_second_moment = std::sqrt(var_sq / static_cast<double>(count));
  return s;
}

std::uint64_t sample_bose_einstein(MeanOccupancy mean, Rng& rng) {
  const double m = mean.value();
  if (m == 0.0) {
    return 0;
  }
  const double log_q = -std::log1p(1.0 / m);
  return static_cast<std::uint64_t>(std::floor(std::log(uniform_open(rng)) / log_q));
}

std::uint64_t sample_binomial_bernoulli(std::uint64_t n, double a, Rng& rng) {
  std::uint64_t k = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    k += uniform01(rng) < a ? 1 : 0;
  }
  return k;
}

std::uint64_t sample_binomial_inversion(std::uint64_t n, double a, Rng& rng) {
  if (n == 0 || a <= 0.0) {
    return 0;
  }
  if (a >= 1.0) {
    return n;
  }
  const bool flip = a > 0.5;
  const double p = flip ? 1.0 - a : a;
  const double odds = p / (1.0 - p);
  const double dn = static_cast<double>(n);
  double u = uniform_open(rng);

  auto up = [&](double f, std::uint64_t k) {  // f(k) -> f(k + 1)
    return f * (static_cast<double>(n - k) / static_cast<double>(k + 1)) * odds;
  };
  auto down = [&](double f, std::uint64_t k) {  // f(k) -> f(k - 1)
    return f * (static_cast<double>(k) / static_cast<double>(n - k + 1)) / odds;
  };

  std::uint64_t k = 0;
  const double log_f0 = dn * std::log1p(-p);
  if (log_f0 > -600.0) {
    double f = std::exp(log_f0);
    while (u > f && k < n && f > 0.0) {
      u -= f;
      f = up(f, k);
      ++k;
    }
  } else {
    const auto mode = std::min(n, static_cast<std::uint64_t>((dn + 1.0) * p));
    const double dm = static_cast<double>(mode);
    const double f_mode =
        std::exp(std::lgamma(dn + 1.0) - std::lgamma(dm + 1.0) -
                 std::lgamma(dn - dm + 1.0) + dm * std::log(p) +
                 (dn - dm) * std::log1p(-p));
    std::uint64_t lo = mode;
    std::uint64_t hi = mode;
    double f_lo = f_mode;
    double f_hi = f_mode;
    k = mode;
    u -= f_mode;
    while (u > 0.0) {
      const bool can_down = lo > 0 && f_lo > 0.0;
      const bool can_up = hi < n && f_hi > 0.0;
      if (!can_down && !can_up) {
        k = mode;  // leftover rounding mass
        break;
      }
      if (can_down) {
        f_lo = down(f_lo, lo);
        --lo;
        u -= f_lo;
        if (u <= 0.0) {
          k = lo;
          break;
        }
      }
      if (can_up) {
        f_hi = up(f_hi, hi);
        ++hi;
        u -= f_hi;
        if (u <= 0.0) {
          k = hi;
          break;
        }
      }
    }
  }
  return flip ? n - k : k;
}

std::uint64_t sample_binomial(std::uint64_t n, double a, Rng& rng) {
  return n <= kBernoulliBinomialLimit ? sample_binomial_bernoulli(n, a, rng)
                                      : sample_binomial_inversion(n, a, rng);
}

std::uint64_t transmit_event(TransmissionModel model, std::uint64_t n,
                             Transmittance a, Rng& rng) {
  if (model == TransmissionModel::Independent) {
    return sample_binomial(n, a.value(), rng);
  }
  return uniform01(rng) < a.value() ? n : 0;
}

SampleStats run_transmission_experiment(TransmissionModel model,
                                        MeanOccupancy mean_in, Transmittance a,
                                        std::uint64_t n_trials, RngSeed seed,
                                        unsigned threads) {
  require_trials(n_trials);
  struct State {
    MomentAccumulator out;
    void merge(const State& other) { out.merge(other.out); }
  };
  const auto total = run_trials(n_trials, threads, State{},
                                [&](State& s, std::uint64_t t) {
                                  auto rng = trial_stream(seed.value, t);
                                  const auto n = sample_bose_einstein(mean_in, rng);
                                  s.out.add(transmit_event(model, n, a, rng));
                                });
  return total.out.stats();
}

std::size_t default_trial_cutoff(Transmittance a) {
  if (a.value() == 0.0) {
    throw DomainError("cavity requires transmittance a > 0");
  }
  if (a.value() == 1.0) {
    return 1;
  }
  constexpr double target = 1e-9;
  const double log_r = std::log1p(-a.value());
  auto i = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::log(target) / log_r) - 1.0));
  while (std::pow(1.0 - a.value(), static_cast<double>(i)) >= target) {
    ++i;
  }
  while (i > 1 && std::pow(1.0 - a.value(), static_cast<double>(i - 1)) < target) {
    --i;
  }
  return i;
}

CavityTrialRecord simulate_cavity_trial(TransmissionModel model, std::uint64_t n,
                                        Transmittance a, std::size_t cutoff,
                                        Rng& rng) {
  CavityTrialRecord record;
  record.initial = n;
  std::uint64_t inside = n;
  if (model == TransmissionModel::Independent) {
    while (inside > 0 && record.per_bounce_escapes.size() < cutoff) {
      const auto k = sample_binomial(inside, a.value(), rng);
      record.per_bounce_escapes.push_back(k);
      record.total_escaped += k;
      inside -= k;
    }
  } else if (inside > 0) {
    while (record.per_bounce_escapes.size() < cutoff) {
      if (uniform01(rng) < a.value()) {
        record.per_bounce_escapes.push_back(inside);
        record.total_escaped = inside;
        inside = 0;
        break;
      }
      record.per_bounce_escapes.push_back(0);
    }
  }
  record.bounces_used = record.per_bounce_escapes.size();
  record.still_circulating = inside;
  return record;
}

CavityExperimentResult run_cavity_experiment(TransmissionModel model,
                                             MeanOccupancy mean_in,
                                             Transmittance a,
                                             std::uint64_t n_trials,
                                             std::size_t cutoff, RngSeed seed,
                                             unsigned threads) {
  require_trials(n_trials);
  if (a.value() == 0.0) {
    throw DomainError("cavity requires transmittance a > 0 (at a = 0 nothing escapes)");
  }
  if (cutoff < 1) {
    throw DomainError("bounce cutoff must be at least 1");
  }

  CavityState prototype;
  prototype.per_bounce.resize(cutoff);
  const auto total = run_trials(
      n_trials, threads, prototype, [&](CavityState& s, std::uint64_t t) {
        auto rng = trial_stream(seed.value, t);
        const auto n = sample_bose_einstein(mean_in, rng);
        const auto record = simulate_cavity_trial(model, n, a, cutoff, rng);
        std::uint64_t sum_sq = 0;
        for (std::size_t i = 0; i < record.bounces_used; ++i) {
          const auto k = record.per_bounce_escapes[i];
          if (k != 0) {
            s.per_bounce[i].add(k);
            sum_sq += k * k;
          }
        }
        s.total.add(record.total_escaped);
        s.aggregate.add(sum_sq);
        if (record.still_circulating > 0) {
          ++s.residual_trials;
          s.residual_photons += record.still_circulating;
        }
      });

  CavityExperimentResult result;
  result.cutoff = cutoff;
  result.per_bounce.reserve(cutoff);
  for (const auto& acc : total.per_bounce) {
    result.per_bounce.push_back(acc.stats(n_trials));
  }
  result.total_escaped = total.total.stats();
  if (model == TransmissionModel::Independent) {
    const auto agg = total.aggregate.stats();
    result.aggregate_second_moment = {agg.mean, agg.stderr_mean};
  } else {
    result.aggregate_second_moment = {result.total_escaped.second_moment,
                                      result.total_escaped.stderr_second_moment};
  }
  result.residual_trials = total.residual_trials;
  result.residual_photons = total.residual_photons;
  return result;
}

}  // namespace photostat
