#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "zimin/errors.hpp"

namespace zimin {

// Generator used by every sampler in the library. std::mt19937_64's output
// sequence is fixed by the C++ standard, so seeds reproduce across platforms.
using SampleEngine = std::mt19937_64;
inline constexpr const char* kSampleEngineName = "mt19937_64";

// Uniform draw from {0, ..., bound-1} by rejection; unlike
// std::uniform_int_distribution its output is specified here, not by the
// standard library implementation.
inline std::uint64_t uniform_below(SampleEngine& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine();
    if (x < limit) return x % bound;
  }
}

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string generator = kSampleEngineName;
};

// T(m,k,ell) equals the probability that k independent uniform words of
// length ell over m letters share one Parikh vector. Returns the sample
// frequency with its binomial standard error.
inline McEstimate mc_estimate_T(std::uint32_t m, std::uint32_t k, std::uint32_t ell,
                                std::uint64_t samples, std::uint64_t seed) {
  detail::require(m >= 1 && k >= 1, "mc_estimate_T: m and k must be positive");
  detail::require(samples >= 1, "mc_estimate_T: need at least one sample");
  SampleEngine engine(seed);
  std::vector<std::uint32_t> first(m), other(m);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::fill(first.begin(), first.end(), 0);
    for (std::uint32_t t = 0; t < ell; ++t) ++first[uniform_below(engine, m)];
    bool agree = true;
    // every word is drawn even after a mismatch so the stream position does
    // not depend on outcomes
    for (std::uint32_t w = 1; w < k; ++w) {
      std::fill(other.begin(), other.end(), 0);
      for (std::uint32_t t = 0; t < ell; ++t) ++other[uniform_below(engine, m)];
      agree = agree && other == first;
    }
    hits += agree ? 1 : 0;
  }
  McEstimate out;
  out.hits = hits;
  out.samples = samples;
  out.seed = seed;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace zimin
