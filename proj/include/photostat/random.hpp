// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace photostat {

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  constexpr explicit SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256++ 1.0 (Blackman and Vigna).
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  /// Fills the state from a SplitMix64 sequence started at `seed`.
  constexpr explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 init(seed);
    for (auto& word : s_) {
      word = init();
    }
  }

  /// Uses `state` verbatim; it must not be all zeros.
  constexpr explicit Xoshiro256pp(const std::array<std::uint64_t, 4>& state)
      : s_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

using Rng = Xoshiro256pp;

/// Name recorded in output metadata; bump it if the stream rule changes.
inline constexpr const char* kGeneratorName =
    "xoshiro256++ per-trial streams, key = mix64(seed) + trial * 0xD1B54A32D192ED03";

/// Generator for trial `trial` of a run seeded with `seed`. A pure function
/// of (seed, trial): distinct trials of one seed get distinct SplitMix64
/// starting points because the multiplier is odd.
constexpr Rng trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix64(seed) + trial * 0xD1B54A32D192ED03ULL);
}

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform on the open interval (0, 1).
inline double uniform_open(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace photostat
